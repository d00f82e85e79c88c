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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmaj/qpolynomial.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/word.hpp"

namespace kmaj {

enum class WordStatistic { maj, inv, maj_k };

std::string to_string(WordStatistic s);
// Accepts "maj", "inv", "majk"/"maj_k".
WordStatistic parse_word_statistic(const std::string& name);

// Words larger than this are rejected by word_distribution.
inline constexpr std::size_t max_distribution_word_count = 50'000'000;

// Sum over all words on m with the given spacer positions of q^{stat(w)}.
// k is only consulted for WordStatistic::maj_k.
QPolynomial word_distribution(const Multiset& m, const std::set<Position>& spacers, WordStatistic stat, int k = 1);

// Sum over SYT(shape) of q^{maj_k(T)}, k in {1, 2, 3}.
QPolynomial syt_distribution(const Partition& shape, int k);

// [n]_q! / prod_v [m_v]_q!, computed as a product of Gaussian binomials.
QPolynomial q_multinomial(const Multiset& m);

// Number of words on m: n! / prod m_v!.
std::uint64_t multinomial(const Multiset& m);

struct MahonianReport {
  Multiset multiset;
  std::set<Position> spacers;
  // distributions[k-1] is the maj_k distribution.
  std::vector<QPolynomial> distributions;
  // Per k: equal to the k = 1 distribution.
  std::vector<bool> equal_to_maj;
  // Only present without spacers.
  std::optional<bool> matches_q_multinomial;

  bool passed() const;
};

// Compares the maj_k distributions for k = 1..k_max, and the spacer-free maj
// distribution against q_multinomial.
MahonianReport verify_mahonian(const Multiset& m, const std::set<Position>& spacers, int k_max);

}  // namespace kmaj
