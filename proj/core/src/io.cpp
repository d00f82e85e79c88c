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

#include "kmaj/io.hpp"

#include <charconv>

#include "kmaj/error.hpp"

namespace kmaj {

namespace {

bool is_separator(char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidInput("malformed " + std::string(what) + " token '" + std::string(token) + "'");
  }
  return value;
}

int parse_positive(std::string_view token, std::string_view what) {
  const int v = parse_int(token, what);
  if (v < 1) throw InvalidInput(std::string(what) + " values must be positive, got " + std::string(token));
  return v;
}

std::string_view strip_parens(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '(' || text.front() == '[')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')' || text.back() == ']')) text.remove_suffix(1);
  return text;
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  for (auto token : tokenize(text)) {
    if (token == "_") {
      letters.push_back(Letter::spacer());
    } else {
      letters.push_back(Letter::of(parse_positive(token, "word")));
    }
  }
  return Word(std::move(letters));
}

StandardTableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    if (slash == std::string_view::npos) slash = text.size();
    std::vector<int> row;
    for (auto token : tokenize(text.substr(start, slash - start))) row.push_back(parse_positive(token, "tableau"));
    if (row.empty()) throw InvalidInput("empty tableau row in '" + std::string(text) + "'");
    rows.push_back(std::move(row));
    start = slash + 1;
  }
  return StandardTableau(std::move(rows));
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  for (auto token : tokenize(strip_parens(text))) parts.push_back(parse_positive(token, "partition"));
  return Partition(std::move(parts));
}

Multiset parse_multiset(std::string_view text) {
  std::map<int, int> counts;
  for (auto token : tokenize(strip_parens(text))) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      ++counts[parse_positive(token, "multiset")];
    } else {
      counts[parse_positive(token.substr(0, colon), "multiset")] += parse_positive(token.substr(colon + 1), "multiset");
    }
  }
  return Multiset(std::move(counts));
}

std::set<Position> parse_positions(std::string_view text) {
  std::set<Position> out;
  for (auto token : tokenize(strip_parens(text))) out.insert(static_cast<Position>(parse_positive(token, "position")));
  return out;
}

nlohmann::json to_json(const Word& w) {
  auto out = nlohmann::json::array();
  for (Letter l : w.letters()) {
    if (l.is_spacer()) {
      out.push_back(nullptr);
    } else {
      out.push_back(l.code());
    }
  }
  return out;
}

Word word_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("word JSON must be an array");
  std::vector<Letter> letters;
  for (const auto& e : j) {
    if (e.is_null()) {
      letters.push_back(Letter::spacer());
    } else if (e.is_number_integer()) {
      letters.push_back(Letter::of(e.get<int>()));
    } else {
      throw InvalidInput("word JSON entries must be integers or null");
    }
  }
  return Word(std::move(letters));
}

nlohmann::json to_json(const IndexPairSet& s) {
  auto out = nlohmann::json::array();
  for (const auto& p : s) out.push_back({p.first, p.second});
  return out;
}

IndexPairSet index_pairs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("index pair set JSON must be an array");
  std::vector<IndexPair> pairs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("index pairs must be [i, j]");
    pairs.push_back({e[0].get<Position>(), e[1].get<Position>()});
  }
  return IndexPairSet(std::move(pairs));
}

nlohmann::json to_json(const Partition& p) { return nlohmann::json(std::vector<int>(p.parts().begin(), p.parts().end())); }

nlohmann::json to_json(const StandardTableau& t) { return {{"shape", to_json(t.shape())}, {"rows", t.rows()}}; }

StandardTableau tableau_from_json(const nlohmann::json& j) {
  try {
    StandardTableau t(j.at("rows").get<std::vector<std::vector<int>>>());
    if (j.contains("shape") && Partition(j.at("shape").get<std::vector<int>>()) != t.shape()) {
      throw InvalidInput("tableau JSON shape does not match its rows");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed tableau JSON: ") + e.what());
  }
}

nlohmann::json to_json(const QPolynomial& p) { return {{"coeffs", p.coeffs()}}; }

QPolynomial qpolynomial_from_json(const nlohmann::json& j) {
  try {
    return QPolynomial(j.at("coeffs").get<std::vector<QPolynomial::Coefficient>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Multiset& m) {
  auto out = nlohmann::json::object();
  for (const auto& [letter, count] : m.counts()) out[std::to_string(letter)] = count;
  return out;
}

nlohmann::json to_json(const EquivClass& c) {
  auto members = nlohmann::json::array();
  for (const auto& w : c.members) members.push_back(to_json(w));
  return {{"members", members}, {"des_k", to_json(c.shared_des_k)}, {"inv_k", c.shared_inv_count}};
}

nlohmann::json classes_to_json(int k, const std::vector<EquivClass>& classes) {
  auto arr = nlohmann::json::array();
  for (const auto& c : classes) arr.push_back(to_json(c));
  return {{"k", k}, {"classes", arr}};
}

std::vector<EquivClass> classes_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    std::vector<EquivClass> out;
    for (const auto& c : j.at("classes")) {
      EquivClass cls;
      cls.k = k;
      for (const auto& m : c.at("members")) cls.members.push_back(word_from_json(m));
      cls.shared_des_k = index_pairs_from_json(c.at("des_k"));
      cls.shared_inv_count = c.at("inv_k").get<long>();
      out.push_back(std::move(cls));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed classes JSON: ") + e.what());
  }
}

}  // namespace kmaj
