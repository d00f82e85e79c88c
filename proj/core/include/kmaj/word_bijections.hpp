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

#include <vector>

#include "kmaj/word.hpp"

namespace kmaj {

// Indices i selected for the transpositions (i, i+1) of gamma_j^(k): a
// decreasing chain j-k, j-2k, ... cut off at the first index whose
// splitting condition fails.
struct GammaIndexSet {
  std::vector<Position> indices;
  std::size_t word_length = 0;
  Position j = 0;
  int k = 0;

  bool empty() const { return indices.empty(); }
  friend bool operator==(const GammaIndexSet&, const GammaIndexSet&) = default;
};

// j-k is selected iff w_j splits (w_{j-k}, w_{j-k+1}); below a selected i,
// i-k is selected iff exactly one of w_i, w_{i+1} splits (w_{i-k}, w_{i-k+1}).
// Requires 1 <= j <= |w| and k >= 2.
GammaIndexSet gamma_index_set(const Word& w, Position j, int k);

// Swaps w_i and w_{i+1} for every i in gamma_index_set(w, j, k). Involution.
Word gamma(const Word& w, Position j, int k);

// gamma_n o ... o gamma_1 (w). maj_{k-1}(w) == maj_k(phi_k(w, k)).
Word phi_k(const Word& w, int k);
// gamma_1 o ... o gamma_n (w); two-sided inverse of phi_k.
Word psi_k(const Word& w, int k);

// phi^(i) o ... o phi^(h+1) (w), so maj_h(w) == maj_i(phi_range(w, i, h)).
// Requires 1 <= h < i.
Word phi_range(const Word& w, int i, int h);

// Foata's second fundamental transformation; maj(w) == inv(foata(w)).
// Rejects words containing spacers.
Word foata(const Word& w);

}  // namespace kmaj
