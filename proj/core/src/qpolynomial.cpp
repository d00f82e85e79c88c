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

#include "kmaj/qpolynomial.hpp"

#include <algorithm>

namespace kmaj {

QPolynomial::QPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(std::size_t degree, Coefficient c) {
  QPolynomial p;
  p.add_term(degree, c);
  return p;
}

QPolynomial QPolynomial::q_integer(std::size_t n) { return QPolynomial(std::vector<Coefficient>(n, 1)); }

QPolynomial QPolynomial::q_factorial(std::size_t n) {
  QPolynomial p{1};
  for (std::size_t i = 2; i <= n; ++i) p = p * q_integer(i);
  return p;
}

QPolynomial QPolynomial::q_binomial(std::size_t n, std::size_t k) {
  if (k > n) return {};
  // row[j] = [m choose j]_q for the current m.
  std::vector<QPolynomial> row{QPolynomial{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<QPolynomial> next(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      // [m choose j] = [m-1 choose j-1] + q^j [m-1 choose j]
      if (j >= 1) next[j] += row[j - 1];
      if (j < m) next[j] += monomial(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

QPolynomial::Coefficient QPolynomial::total() const {
  Coefficient sum = 0;
  for (Coefficient c : coeffs_) sum += c;
  return sum;
}

void QPolynomial::add_term(std::size_t degree, Coefficient c) {
  if (c == 0) return;
  if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] += c;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPolynomial::Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    const auto c = p.coeffs()[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'q';
    if (d > 1) out += '^' + std::to_string(d);
  }
  return out;
}

}  // namespace kmaj
