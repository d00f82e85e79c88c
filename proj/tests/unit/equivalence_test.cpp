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

#include <doctest.h>

#include <set>

#include "kmaj/enumerate.hpp"
#include "kmaj/equivalence.hpp"
#include "kmaj/error.hpp"
#include "kmaj/word_bijections.hpp"

using namespace kmaj;

namespace {

std::set<std::set<Word>> class_sets(int n, int k, const std::set<Position>& spacers = {}) {
  std::set<std::set<Word>> out;
  for (const auto& c : k_classes(n, k, spacers)) out.insert({c.members.begin(), c.members.end()});
  return out;
}

}  // namespace

TEST_CASE("classes of S_3") {
  const std::set<std::set<Word>> one = {
      {{1, 2, 3}}, {{2, 1, 3}, {3, 1, 2}}, {{2, 3, 1}, {1, 3, 2}}, {{3, 2, 1}}};
  const std::set<std::set<Word>> two = {
      {{1, 2, 3}}, {{2, 1, 3}, {1, 3, 2}}, {{2, 3, 1}, {3, 1, 2}}, {{3, 2, 1}}};
  CHECK(class_sets(3, 1) == one);
  CHECK(class_sets(3, 2) == two);
  const auto classes = k_classes(3, 2);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].members.front() == Word{1, 2, 3});
  CHECK(classes[1].members == std::vector<Word>{{1, 3, 2}, {2, 1, 3}});
  CHECK(classes[1].shared_inv_count == 1);
}

TEST_CASE("d and d~ on the three letters") {
  // i leftmost: (i, x, y) -> (y, x, i) or (x, y, i).
  CHECK(d_involution(Word{2, 1, 3}, 2, false) == Word{3, 1, 2});
  CHECK(d_involution(Word{2, 1, 3}, 2, true) == Word{1, 3, 2});
  // i rightmost: (x, y, i) -> (i, y, x) or (i, x, y).
  CHECK(d_involution(Word{3, 1, 2}, 2, false) == Word{2, 1, 3});
  CHECK(d_involution(Word{1, 3, 2}, 2, true) == Word{2, 1, 3});
  // i between i-1 and i+1.
  CHECK(d_involution(Word{1, 2, 3}, 2, false) == Word{1, 2, 3});
  CHECK(d_involution(Word{3, 2, 1}, 2, true) == Word{3, 2, 1});
  CHECK(lies_between(Word{3, 2, 1}, 2));
  CHECK_FALSE(lies_between(Word{2, 1, 3}, 2));
  // Other letters and spacers stay put.
  CHECK(d_involution(Word{4, 2, 0, 1, 3}, 2, false) == Word{4, 3, 0, 1, 2});
  CHECK(dist3(Word{4, 2, 0, 1, 3}, 2) == 3);
  CHECK(dist3(Word{2, 1, 3}, 2) == 2);
  CHECK(dual_involution(Word{4, 2, 0, 1, 3}, 2, 2) == Word{4, 3, 0, 1, 2});
  CHECK(dual_involution(Word{4, 2, 0, 1, 3}, 2, 3) == d_involution(Word{4, 2, 0, 1, 3}, 2, true));
}

TEST_CASE("the involutions are involutions") {
  for_each_permutation(6, [](const Word& w) {
    for (int i = 2; i <= 5; ++i) {
      for (bool tw : {false, true}) CHECK(d_involution(d_involution(w, i, tw), i, tw) == w);
      for (int k = 1; k <= 6; ++k) CHECK(dual_involution(dual_involution(w, i, k), i, k) == w);
    }
  });
}

TEST_CASE("involution errors") {
  CHECK_THROWS_AS(d_involution(Word{2, 1, 3}, 1, false), InvalidInput);
  CHECK_THROWS_AS(d_involution(Word{2, 1, 3}, 3, false), InvalidInput);
  CHECK_THROWS_AS(d_involution(Word{2, 2, 3}, 2, false), InvalidInput);
  CHECK_THROWS_AS(k_classes(3, 0), InvalidInput);
}

TEST_CASE("class invariants hold for small n with and without spacers") {
  for (int n = 1; n <= 6; ++n) CHECK(check_class_invariants(n).passed());
  for (const auto& mask : spacer_masks(6, 2)) CHECK(check_class_invariants(4, mask).passed());
  const auto with_spacer = class_sets(3, 2, {2});
  std::size_t total = 0;
  for (const auto& c : with_spacer) total += c.size();
  CHECK(total == 6);
}

TEST_CASE("classes partition S_n and share statistics") {
  for (int k = 1; k <= 5; ++k) {
    std::size_t total = 0;
    for (const auto& c : k_classes(5, k)) {
      total += c.members.size();
      for (const auto& w : c.members) {
        CHECK(descent_set_k(w, k) == c.shared_des_k);
        CHECK(inversion_count_k(w, k) == c.shared_inv_count);
      }
    }
    CHECK(total == 120);
  }
  CHECK(k_classes(4, 1).size() == 10);
}

TEST_CASE("phi^(2) intertwines D^(1) and D^(2)") {
  for (int n = 3; n <= 6; ++n) CHECK(check_phi2_commutation(n).passed());
  CHECK_THROWS_AS(check_phi2_commutation(2), InvalidInput);
}

TEST_CASE("n-classes are determined by inv and the end comparison") {
  for (int n = 2; n <= 6; ++n) CHECK(check_n_class_characterization(n).passed());
}

TEST_CASE("1-classes carry SYT descent sets") {
  for (int n = 1; n <= 5; ++n) CHECK(check_1class_schur_shape(n).passed());
}

TEST_CASE("theta checker") {
  for (int n = 2; n <= 6; ++n) {
    const auto r = check_theta_properties([](const Word& w) { return phi_k(w, 2); }, 2, n);
    CHECK(r.passed());
    CHECK(r.details["properties"]["c"] == true);
  }
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_theta_properties([](const Word& w) { return phi_k(w, 3); }, 3, n).passed());
  }
  const auto r6 = check_theta_properties([](const Word& w) { return phi_k(w, 3); }, 3, 6);
  CHECK_FALSE(r6.passed());
  CHECK(r6.details["properties"]["a"] == true);
  CHECK(r6.details["properties"]["b"] == true);
  CHECK(r6.details["properties"]["c"] == false);
  REQUIRE_FALSE(r6.violations.empty());
  CHECK(r6.violations.front().input.contains("word"));

  const auto id = check_theta_properties([](const Word& w) { return w; }, 2, 4);
  CHECK(id.details["properties"]["b"] == false);
  CHECK_THROWS_AS(check_theta_properties([](const Word& w) { return w; }, 1, 3), InvalidInput);
  CHECK_THROWS_AS(check_theta_properties([](const Word&) { return Word{1, 1}; }, 2, 2), InvalidInput);
}
