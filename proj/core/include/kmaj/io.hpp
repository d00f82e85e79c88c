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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kmaj/equivalence.hpp"
#include "kmaj/qpolynomial.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/word.hpp"

// Text and JSON forms of the library's values. Every parser throws
// InvalidInput on malformed input.
namespace kmaj {

// Comma- or space-separated tokens, `_` for a spacer: "9 8 _ 6 1".
Word parse_word(std::string_view text);
// Bottom row first, rows separated by '/': "1 3 4 7 / 2 5 6 / 8".
StandardTableau parse_tableau(std::string_view text);
// "4,3,1" or "4 3 1", optionally parenthesized.
Partition parse_partition(std::string_view text);
// "letter:count" pairs separated by commas: "1:2,2:1". Plain letters
// ("1,1,2") are also accepted.
Multiset parse_multiset(std::string_view text);
// Comma- or space-separated positive integers.
std::set<Position> parse_positions(std::string_view text);

// Words are arrays of integers with null marking a spacer.
nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IndexPairSet& s);
IndexPairSet index_pairs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& p);

// {"shape":[...],"rows":[[...],...]} with rows bottom-up.
nlohmann::json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j);

// {"coeffs":[...]}
nlohmann::json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Multiset& m);

// {"members":[...],"des_k":[[i,j],...],"inv_k":N}
nlohmann::json to_json(const EquivClass& c);
// {"k":K,"classes":[...]}
nlohmann::json classes_to_json(int k, const std::vector<EquivClass>& classes);
std::vector<EquivClass> classes_from_json(const nlohmann::json& j);

}  // namespace kmaj
