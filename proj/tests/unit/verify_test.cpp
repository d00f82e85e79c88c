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

#include "kmaj/error.hpp"
#include "kmaj/verify.hpp"

using namespace kmaj;

namespace {

SuiteOptions small(int max_size, unsigned threads = 1) {
  SuiteOptions o;
  o.max_size = max_size;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("every suite runs by name") {
  for (const auto& name : suite_names()) {
    auto options = small(name == "k4-breakdown" ? 0 : 4);
    const auto r = run_suite(name, options);
    CHECK(r.name == name);
    CHECK(r.cases > 0);
    if (name != "foata") CHECK_MESSAGE(r.passed(), name);
  }
  CHECK_THROWS_AS(run_suite("nope", small(3)), InvalidInput);
}

TEST_CASE("reports do not depend on the thread count") {
  for (const std::string name : {"mahonian", "phi-props", "nclass", "mahonian-syt", "theta-check"}) {
    auto one = small(5, 1);
    auto four = small(5, 4);
    if (name == "theta-check") one.k = four.k = 3;
    CHECK(to_json(run_suite(name, one)) == to_json(run_suite(name, four)));
  }
  auto one = small(5, 1);
  auto four = small(5, 4);
  one.with_spacers = four.with_spacers = true;
  CHECK(to_json(run_suite("mahonian", one)) == to_json(run_suite("mahonian", four)));
}

TEST_CASE("mahonian suite separates spacer-free and masked cases") {
  auto o = small(4);
  o.with_spacers = true;
  const auto r = verify_mahonian_words(o);
  CHECK(r.details["spacer_free"]["cases"] == 8 + 4 + 2 + 1 + 1);
  CHECK(r.details["spacer_free"]["failed"] == 0);
  CHECK(r.details["with_spacers"]["cases"].get<int>() > 0);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().input.contains("multiset"));
  CHECK(r.violations.front().input.contains("spacers"));
  CHECK(r.violations.size() <= CheckReport::max_recorded);
  CHECK(r.violation_count >= r.violations.size());
}

TEST_CASE("theta suite reports property c for phi^(3)") {
  SuiteOptions o;
  o.k = 3;
  o.max_size = 6;
  const auto r = verify_theta(o);
  CHECK_FALSE(r.passed());
  CHECK(r.details["properties"]["a"] == true);
  CHECK(r.details["properties"]["b"] == true);
  CHECK(r.details["properties"]["c"] == false);
  CHECK(r.details["first_failing_n"]["c"] == 6);
  o.k = 2;
  CHECK(verify_theta(o).passed());
  o.candidate = "identity";
  CHECK_FALSE(verify_theta(o).passed());
  o.candidate = "psi";
  o.n = 4;
  CHECK(verify_theta(o).details["sizes"] == nlohmann::json::array({4, 4}));
  o.candidate = "other";
  CHECK_THROWS_AS(verify_theta(o), InvalidInput);
  o.candidate = "phi";
  o.k = 1;
  CHECK_THROWS_AS(verify_theta(o), InvalidInput);
}

TEST_CASE("k4 breakdown finds a witness") {
  const auto r = verify_k4_breakdown({});
  CHECK(r.passed());
  CHECK(r.cases == 5);
  REQUIRE(r.details.contains("witness"));
  CHECK(r.details["witness"]["maj_3"] != r.details["witness"]["maj_4_of_image"]);
}

TEST_CASE("foata suite needs n = 6 for a witness") {
  const auto at5 = verify_foata_divergence(small(5));
  CHECK_FALSE(at5.passed());
  CHECK(at5.violation_count == 1);
  const auto at6 = verify_foata_divergence(small(6));
  CHECK(at6.passed());
  CHECK(at6.details["witness"]["word"] == nlohmann::json::array({1, 6, 3, 2, 5, 4}));
  CHECK(at6.details["per_size"][5]["differing"] == 16);
}

TEST_CASE("negative sizes are rejected") {
  CHECK_THROWS_AS(run_suite("nclass", small(-1)), InvalidInput);
}
