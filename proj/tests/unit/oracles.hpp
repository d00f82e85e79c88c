// Copyright 2026 The kmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force reference implementations used as test oracles. They work on
// plain integer codes (0 = spacer) and follow the definitions literally,
// sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Codes = std::vector<int>;
using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

inline bool gt(int a, int b) { return a != 0 && b != 0 && a > b; }

inline Pairs des_k(const Codes& w, int k) {
  Pairs out;
  for (std::size_t i = 1; i + k <= w.size(); ++i) {
    if (gt(w[i - 1], w[i + k - 1])) out.insert({i, i + k});
  }
  return out;
}

inline Pairs inv_k(const Codes& w, int k) {
  Pairs out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size() && static_cast<int>(j - i) < k; ++j) {
      if (gt(w[i - 1], w[j - 1])) out.insert({i, j});
    }
  }
  return out;
}

inline long maj_k(const Codes& w, int k) {
  long total = static_cast<long>(inv_k(w, k).size());
  for (const auto& p : des_k(w, k)) total += static_cast<long>(p.first);
  return total;
}

inline bool splits(int x, int a, int b) {
  if (x == 0 || a == 0 || b == 0) return false;
  return (a <= x && x < b) || (b <= x && x < a);
}

// Gamma_j^(k)(w) as a set, built from the recursive definition.
inline std::set<std::size_t> gamma_set(const Codes& w, std::size_t j, int k) {
  std::set<std::size_t> out;
  auto at = [&](std::size_t p) { return w[p - 1]; };
  if (j <= static_cast<std::size_t>(k)) return out;
  std::size_t i = j - k;
  if (!splits(at(j), at(i), at(i + 1))) return out;
  out.insert(i);
  while (i > static_cast<std::size_t>(k)) {
    const std::size_t lo = i - k;
    const bool a = splits(at(i), at(lo), at(lo + 1));
    const bool b = splits(at(i + 1), at(lo), at(lo + 1));
    if (a == b) break;
    out.insert(lo);
    i = lo;
  }
  return out;
}

// Applies every transposition of the set to the original word at once.
inline Codes gamma(const Codes& w, std::size_t j, int k) {
  Codes out = w;
  for (std::size_t i : gamma_set(w, j, k)) std::swap(out[i - 1], out[i]);
  return out;
}

inline Codes phi(Codes w, int k) {
  for (std::size_t j = 1; j <= w.size(); ++j) w = gamma(w, j, k);
  return w;
}

inline long inv(const Codes& w) { return static_cast<long>(inv_k(w, static_cast<int>(w.size()) + 1).size()); }

inline long maj(const Codes& w) { return maj_k(w, 1); }

// Positions i with i+1 to the left of i.
inline std::vector<int> ides(const Codes& w) {
  std::vector<std::size_t> pos(w.size() + 1);
  for (std::size_t p = 0; p < w.size(); ++p) pos[w[p]] = p;
  std::vector<int> out;
  for (std::size_t v = 1; v < w.size(); ++v) {
    if (pos[v + 1] < pos[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

// Coefficient vectors with exact integer arithmetic.
using Poly = std::vector<std::int64_t>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(out);
}

// Exact long division; the divisor is monic-like ([h]_q has unit leading
// and constant coefficient).
inline Poly div_exact(Poly num, const Poly& den) {
  num = trim(num);
  if (num.size() < den.size()) return {};
  Poly quot(num.size() - den.size() + 1, 0);
  for (std::size_t d = quot.size(); d-- > 0;) {
    const std::int64_t c = num[d + den.size() - 1] / den.back();
    quot[d] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[d + i] -= c * den[i];
  }
  for (auto c : num) {
    if (c != 0) return {-1};
  }
  return trim(quot);
}

inline Poly q_int(int n) { return Poly(static_cast<std::size_t>(n), 1); }

inline Poly q_fact(int n) {
  Poly out = {1};
  for (int i = 1; i <= n; ++i) out = mul(out, q_int(i));
  return out;
}

// q^{b(lambda)} [n]_q! / prod_cells [h(c)]_q with b(lambda) = sum (i-1) lambda_i.
inline Poly q_hook(const std::vector<int>& lambda) {
  int n = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    n += lambda[i];
    b += i * static_cast<std::size_t>(lambda[i]);
  }
  Poly num = q_fact(n);
  Poly den = {1};
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++below;
      den = mul(den, q_int(lambda[r] - c + below));
    }
  }
  Poly out = div_exact(num, den);
  out.insert(out.begin(), b, 0);
  return out;
}

inline std::uint64_t hook_count(const std::vector<int>& lambda) {
  auto p = q_hook(lambda);
  std::uint64_t total = 0;
  for (auto c : p) total += static_cast<std::uint64_t>(c);
  return total;
}

// [n]_q! / prod [m_v]_q!.
inline Poly q_multinomial(const std::vector<int>& multiplicities) {
  int n = 0;
  Poly den = {1};
  for (int m : multiplicities) {
    n += m;
    den = mul(den, q_fact(m));
  }
  return div_exact(q_fact(n), den);
}

// Longest strictly increasing subsequence length.
inline std::size_t lis(const Codes& w) {
  std::vector<std::size_t> best(w.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace oracle
