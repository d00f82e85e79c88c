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

#include "kmaj/enumerate.hpp"

#include "kmaj/error.hpp"

namespace kmaj {

Word place_letters(std::span<const int> letters, const std::set<Position>& spacers) {
  const std::size_t total = letters.size() + spacers.size();
  if (!spacers.empty() && (*spacers.begin() < 1 || *spacers.rbegin() > total)) {
    throw InvalidInput("spacer positions must lie in [1, " + std::to_string(total) + "]");
  }
  std::vector<Letter> out;
  out.reserve(total);
  auto next = letters.begin();
  for (Position p = 1; p <= total; ++p) {
    if (spacers.contains(p)) {
      out.push_back(Letter::spacer());
    } else {
      out.push_back(Letter::of(*next++));
    }
  }
  return Word(std::move(out));
}

std::vector<Word> words_on(const Multiset& m, const std::set<Position>& spacers) {
  std::vector<Word> out;
  for_each_word(m, spacers, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> permutations(std::size_t n) {
  std::vector<Word> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Multiset> multisets_of_size(std::size_t n) {
  std::vector<Multiset> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Compositions of n by a bitmask over the n-1 gaps between unit cells.
  const std::size_t gaps = n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (std::size_t{1} << g)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(Multiset::from_multiplicities(parts));
  }
  return out;
}

std::vector<std::set<Position>> spacer_masks(std::size_t total_length, std::size_t spacer_count) {
  std::vector<std::set<Position>> out;
  if (spacer_count > total_length) return out;
  std::vector<bool> chosen(total_length, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(spacer_count), true);
  do {
    std::set<Position> mask;
    for (std::size_t i = 0; i < total_length; ++i) {
      if (chosen[i]) mask.insert(i + 1);
    }
    out.push_back(std::move(mask));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace kmaj
