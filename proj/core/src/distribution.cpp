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

#include "kmaj/distribution.hpp"

#include <algorithm>

#include "kmaj/enumerate.hpp"
#include "kmaj/error.hpp"

namespace kmaj {

std::string to_string(WordStatistic s) {
  switch (s) {
    case WordStatistic::maj:
      return "maj";
    case WordStatistic::inv:
      return "inv";
    case WordStatistic::maj_k:
      return "majk";
  }
  return "?";
}

WordStatistic parse_word_statistic(const std::string& name) {
  if (name == "maj") return WordStatistic::maj;
  if (name == "inv") return WordStatistic::inv;
  if (name == "majk" || name == "maj_k") return WordStatistic::maj_k;
  throw InvalidInput("unknown statistic '" + name + "' (expected maj, inv or majk)");
}

std::uint64_t multinomial(const Multiset& m) {
  // Product of binomials keeps intermediates exact.
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (const auto& [letter, count] : m.counts()) {
    for (int c = 1; c <= count; ++c) {
      ++placed;
      result = result * placed / static_cast<std::uint64_t>(c);
    }
  }
  return result;
}

QPolynomial word_distribution(const Multiset& m, const std::set<Position>& spacers, WordStatistic stat, int k) {
  if (stat == WordStatistic::maj_k && k < 1) throw InvalidInput("k must be a positive integer");
  if (multinomial(m) > max_distribution_word_count) {
    throw InvalidInput("multiset " + to_string(m) + " has too many words to enumerate");
  }
  QPolynomial out;
  for_each_word(m, spacers, [&](const Word& w) {
    long value = 0;
    switch (stat) {
      case WordStatistic::maj:
        value = maj(w);
        break;
      case WordStatistic::inv:
        value = inv(w);
        break;
      case WordStatistic::maj_k:
        value = maj_k(w, k);
        break;
    }
    out.add_term(static_cast<std::size_t>(value));
  });
  return out;
}

QPolynomial syt_distribution(const Partition& shape, int k) {
  if (k < 1 || k > 3) throw InvalidInput("SYT distributions are defined for k in {1,2,3}, got " + std::to_string(k));
  QPolynomial out;
  for (const auto& t : enumerate_syt(shape)) out.add_term(static_cast<std::size_t>(maj_k(t, k)));
  return out;
}

QPolynomial q_multinomial(const Multiset& m) {
  QPolynomial out{1};
  std::size_t placed = 0;
  for (const auto& [letter, count] : m.counts()) {
    placed += static_cast<std::size_t>(count);
    out = out * QPolynomial::q_binomial(placed, static_cast<std::size_t>(count));
  }
  return out;
}

bool MahonianReport::passed() const {
  const bool all_equal = std::all_of(equal_to_maj.begin(), equal_to_maj.end(), [](bool b) { return b; });
  return all_equal && matches_q_multinomial.value_or(true);
}

MahonianReport verify_mahonian(const Multiset& m, const std::set<Position>& spacers, int k_max) {
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  MahonianReport report{m, spacers, {}, {}, std::nullopt};
  for (int k = 1; k <= k_max; ++k) {
    report.distributions.push_back(word_distribution(m, spacers, WordStatistic::maj_k, k));
    report.equal_to_maj.push_back(report.distributions.back() == report.distributions.front());
  }
  if (spacers.empty()) report.matches_q_multinomial = report.distributions.front() == q_multinomial(m);
  return report;
}

}  // namespace kmaj
