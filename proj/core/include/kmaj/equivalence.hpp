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

#include <functional>
#include <set>
#include <vector>

#include "kmaj/report.hpp"
#include "kmaj/word.hpp"

namespace kmaj {

// True iff i sits positionally between i-1 and i+1 in w. On such words the
// involutions below act as the identity.
// Requires w.is_permutation() and 2 <= i <= max letter - 1.
bool lies_between(const Word& w, int i);

// d_i (twiddle = false) or d~_i (twiddle = true). With the letters i-1, i,
// i+1 read left to right in their three slots as (i, x, y), d_i gives
// (y, x, i) and d~_i gives (x, y, i); the mirrored forms are the inverses.
// Every other letter and spacer stays put.
Word d_involution(const Word& w, int i, bool twiddle);

// Largest distance between the positions of i-1, i, i+1 (spacers count).
int dist3(const Word& w, int i);

// D^(k)_i: d_i when dist3 > k, otherwise d~_i.
Word dual_involution(const Word& w, int i, int k);

struct EquivClass {
  int k = 0;
  // Lexicographically sorted.
  std::vector<Word> members;
  IndexPairSet shared_des_k;
  long shared_inv_count = 0;
};

// Orbits of the D^(k)_i (2 <= i <= n-1) on permutations of {1..n} placed
// around the given spacer positions. Classes are ordered by first member.
std::vector<EquivClass> k_classes(int n, int k, const std::set<Position>& spacers = {});

// D^(k)_i is an involution on every word and Des_k, |Inv_k| are constant on
// every class, for all k in 1..n+|spacers|.
CheckReport check_class_invariants(int n, const std::set<Position>& spacers = {});

// phi^(2)(D^(1)_i(w)) == D^(2)_i(phi^(2)(w)) for all w in S_n and every i not
// lying between i-1 and i+1.
CheckReport check_phi2_commutation(int n);

// w ~_n u iff inv(w) == inv(u) and (w_1 > w_n) == (u_1 > u_n); and
// phi^[n,1](w) ~_n phi^[n,1](d_i(w)) whenever d_i acts.
CheckReport check_n_class_characterization(int n);

using WordMap = std::function<Word(const Word&)>;

// Checks a candidate theta^(k) on S_n for
//   (a) bijectivity, last letter fixed with the w_{n-k+1} > w_n comparison
//       transfer, and ides preservation;
//   (b) maj_{k-1}(w) == maj_k(theta(w));
//   (c) w ~_{k-1} u implies theta(w) ~_k theta(u).
// details["properties"] holds {"a","b","c"} -> bool. Throws InvalidInput if
// the candidate throws or leaves S_n on some input. Requires k >= 2.
CheckReport check_theta_properties(const WordMap& candidate, int k, int n);

// Every 1-class C of S_n has a shape lambda with
// {ides(w) : w in C} == {Des(T) : T in SYT(lambda)} as multisets.
CheckReport check_1class_schur_shape(int n);

}  // namespace kmaj
