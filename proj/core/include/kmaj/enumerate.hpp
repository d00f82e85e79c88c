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

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "kmaj/word.hpp"

namespace kmaj {

// Places `letters` (in order) into the non-spacer slots of a word of length
// letters.size() + spacers.size(). Spacer positions are 1-based.
Word place_letters(std::span<const int> letters, const std::set<Position>& spacers);

// Calls fn(const Word&) for every word on m with the given spacer positions,
// in lexicographic order of the letter sequence.
template <typename Fn>
void for_each_word(const Multiset& m, const std::set<Position>& spacers, Fn&& fn) {
  std::vector<int> letters = m.sorted_letters();
  do {
    fn(place_letters(letters, spacers));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<Word> words_on(const Multiset& m, const std::set<Position>& spacers = {});

// Every permutation of {1..n}, lexicographic.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  for_each_word(Multiset::from_multiplicities(std::vector<int>(n, 1)), {}, std::forward<Fn>(fn));
}

std::vector<Word> permutations(std::size_t n);

// Multisets of size n up to order isomorphism: one per composition of n,
// as {1^c1, 2^c2, ...}. n = 0 yields the empty multiset.
std::vector<Multiset> multisets_of_size(std::size_t n);

// All spacer position sets of the given size inside a word of total_length.
std::vector<std::set<Position>> spacer_masks(std::size_t total_length, std::size_t spacer_count);

// n! for small n.
std::size_t factorial(std::size_t n);

}  // namespace kmaj
