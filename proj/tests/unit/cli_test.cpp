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

#include <sstream>

#include "kmaj/cli.hpp"
#include "kmaj/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kmaj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("stats of the running example") {
  const auto r = run({"stats", "--word", "9 8 6 1 7 3 2 4 5", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("maj_3: 19") != std::string::npos);
  CHECK(r.out.find("Des_3: {(1,4), (2,5), (3,6), (5,8)}") != std::string::npos);
  CHECK(r.out.find("Inv_3: {(1,2), (1,3), (2,3), (2,4), (3,4), (5,6), (5,7), (6,7)}") != std::string::npos);
  CHECK(r.out.find("iDes: {2,5,7,8}") != std::string::npos);
  const auto j = run_json({"stats", "--word", "9 8 6 1 7 3 2 4 5", "--k", "3"});
  CHECK(j["maj_k"] == 19);
  CHECK(kmaj::index_pairs_from_json(j["des_k"]).size() == 4);
}

TEST_CASE("phi and friends") {
  const auto r = run({"phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "9 8 6 1 7 3 2 4 5\n");
  CHECK(run({"psi", "--word", "9,8,6,1,7,3,2,4,5", "--k", "3"}).out == "6 9 3 8 1 7 2 4 5\n");
  CHECK(run({"phirange", "--word", "1 6 3 2 5 4", "--i", "6", "--h", "1"}).out == "6 5 1 3 2 4\n");
  CHECK(run({"foata", "--word", "1 6 3 2 5 4"}).out == "6 3 5 1 2 4\n");
  CHECK(run({"phi", "--word", "3 1 2", "--spacers", "2", "--k", "2"}).code == 0);
  const auto j = run_json({"phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3"});
  CHECK(kmaj::word_from_json(j["output"]) == kmaj::Word{9, 8, 6, 1, 7, 3, 2, 4, 5});
}

TEST_CASE("tableau commands") {
  const auto r = run({"tstats", "--tableau", "1 3 4 7 / 2 5 6 / 8", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("maj_2: 16") != std::string::npos);
  CHECK(run({"Phi", "--tableau", "1 3 5 7 / 2 4 6 / 8", "--k", "2"}).out == "1 3 4 7 / 2 5 6 / 8\n");
  CHECK(run({"Phi", "--tableau", "1 3 4 7 / 2 5 6 / 8", "--k", "2", "--inverse"}).out == "1 3 5 7 / 2 4 6 / 8\n");
  const auto j = run_json({"Phi", "--tableau", "1 3 5 7 / 2 4 6 / 8", "--k", "2"});
  CHECK(kmaj::tableau_from_json(j["output"]) == kmaj::StandardTableau({{1, 3, 4, 7}, {2, 5, 6}, {8}}));
  const auto rsk = run_json({"rsk", "--word", "9 8 6 1 7 3 2 4 5"});
  CHECK(kmaj::tableau_from_json(rsk["q"]).shape() == kmaj::tableau_from_json(rsk["p"]).shape());
}

TEST_CASE("distributions") {
  CHECK(run({"dist", "--multiset", "1,2,3"}).out == "1 + 2q + 2q^2 + q^3\n");
  CHECK(run({"dist", "--shape", "2,2", "--k", "1"}).out == "q^2 + q^4\n");
  CHECK(run({"dist", "--multiset", "1:2,2:2", "--stat", "majk", "--k", "3"}).out == "1 + q + 2q^2 + q^3 + q^4\n");
  const auto j = run_json({"dist", "--shape", "4,3,1", "--k", "3"});
  CHECK(kmaj::qpolynomial_from_json(j["distribution"]).total() == 70);
  const auto csv = run({"dist", "--multiset", "1,2,3", "--format", "csv"});
  CHECK(csv.out == "degree,coefficient\n0,1\n1,2\n2,2\n3,1\n");
}

TEST_CASE("classes") {
  const auto r = run({"classes", "--n", "3", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[1 3 2, 2 1 3]") != std::string::npos);
  CHECK(r.out.find("[2 3 1, 3 1 2]") != std::string::npos);
  const auto j = run_json({"classes", "--n", "3", "--k", "1"});
  CHECK(kmaj::classes_from_json(j).size() == 4);
}

TEST_CASE("verify suites") {
  const auto pass = run({"verify", "mahonian", "--max-size", "6"});
  CHECK(pass.code == 0);
  CHECK(pass.out.rfind("PASS mahonian", 0) == 0);
  const auto fail = run({"verify", "theta-check", "--k", "3", "--candidate", "phi"});
  CHECK(fail.code == 1);
  CHECK(fail.out.rfind("FAIL theta-check", 0) == 0);
  const auto report = nlohmann::json::parse(fail.out.substr(fail.out.find('\n') + 1));
  CHECK(report["violations"][0]["input"].contains("word"));
  const auto j = run_json({"verify", "k4-breakdown"});
  CHECK(j["passed"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"frobnicate"}).err.find("Usage") != std::string::npos);
  CHECK(run({"stats"}).code == 2);
  CHECK(run({"stats", "--word", "1 x"}).code == 2);
  CHECK(run({"phi", "--word", "1 2", "--k", "1"}).code == 2);
  CHECK(run({"tstats", "--tableau", "2 1"}).code == 2);
  CHECK(run({"dist"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"stats", "--word", "1 2", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
