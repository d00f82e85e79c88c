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

#include "kmaj/word.hpp"

#include <algorithm>
#include <numeric>

#include "kmaj/error.hpp"

namespace kmaj {

Letter Letter::of(int value) {
  if (value < 1) throw InvalidInput("letters must be positive integers, got " + std::to_string(value));
  return Letter(value);
}

Word::Word(std::initializer_list<int> codes) : Word(from_codes(std::span<const int>(codes.begin(), codes.size()))) {}

Word Word::from_codes(std::span<const int> codes) {
  std::vector<Letter> letters;
  letters.reserve(codes.size());
  for (int c : codes) {
    if (c < 0) throw InvalidInput("negative letter " + std::to_string(c));
    letters.push_back(c == 0 ? Letter::spacer() : Letter::of(c));
  }
  return Word(std::move(letters));
}

Word Word::identity(std::size_t n) {
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) letters.push_back(Letter::of(static_cast<int>(i)));
  return Word(std::move(letters));
}

Letter Word::at(Position pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw InvalidInput("position " + std::to_string(pos) + " outside word of length " + std::to_string(size()));
  }
  return letters_[pos - 1];
}

void Word::set(Position pos, Letter letter) {
  if (pos < 1 || pos > letters_.size()) {
    throw InvalidInput("position " + std::to_string(pos) + " outside word of length " + std::to_string(size()));
  }
  letters_[pos - 1] = letter;
}

std::vector<int> Word::codes() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.code());
  return out;
}

std::size_t Word::letter_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](Letter l) { return !l.is_spacer(); }));
}

int Word::max_letter() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.code());
  return m;
}

std::vector<Position> Word::spacer_positions() const {
  std::vector<Position> out;
  for (Position i = 1; i <= size(); ++i) {
    if ((*this)[i].is_spacer()) out.push_back(i);
  }
  return out;
}

bool Word::has_spacers() const {
  return std::any_of(letters_.begin(), letters_.end(), [](Letter l) { return l.is_spacer(); });
}

bool Word::is_permutation() const {
  const std::size_t m = letter_count();
  std::vector<bool> seen(m + 1, false);
  for (Letter l : letters_) {
    if (l.is_spacer()) continue;
    const auto v = static_cast<std::size_t>(l.code());
    if (v > m || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<Position> Word::positions_of_letters() const {
  std::vector<Position> pos(letter_count() + 1, 0);
  for (Position i = 1; i <= size(); ++i) {
    const Letter l = (*this)[i];
    if (!l.is_spacer()) pos[static_cast<std::size_t>(l.code())] = i;
  }
  return pos;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
      [](Letter x, Letter y) { return x.code() <=> y.code(); });
}

std::string to_string(const Word& w) {
  std::string out;
  for (Position i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ' ';
    out += w[i].is_spacer() ? std::string("_") : std::to_string(w[i].code());
  }
  return out;
}

IndexPairSet::IndexPairSet(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (p.first < 1 || p.first >= p.second) {
      throw InvalidInput("index pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                         ") is not of the form i < j with i >= 1");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool IndexPairSet::contains(IndexPair p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

IndexPairSet IndexPairSet::united_with(const IndexPairSet& other) const {
  std::vector<IndexPair> merged;
  merged.reserve(size() + other.size());
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(), std::back_inserter(merged));
  IndexPairSet out;
  out.pairs_ = std::move(merged);
  return out;
}

Multiset::Multiset(std::map<int, int> counts) : counts_(std::move(counts)) {
  for (const auto& [letter, count] : counts_) {
    if (letter < 1) throw InvalidInput("multiset letters must be positive, got " + std::to_string(letter));
    if (count < 1) throw InvalidInput("multiplicity of " + std::to_string(letter) + " must be >= 1");
  }
}

Multiset::Multiset(std::initializer_list<int> letters) {
  std::map<int, int> counts;
  for (int l : letters) ++counts[l];
  *this = Multiset(std::move(counts));
}

Multiset Multiset::of_word(const Word& w) {
  std::map<int, int> counts;
  for (Letter l : w.letters()) {
    if (!l.is_spacer()) ++counts[l.code()];
  }
  return Multiset(std::move(counts));
}

Multiset Multiset::from_multiplicities(std::span<const int> multiplicities) {
  std::map<int, int> counts;
  int letter = 1;
  for (int m : multiplicities) counts[letter++] = m;
  return Multiset(std::move(counts));
}

std::size_t Multiset::size() const {
  std::size_t total = 0;
  for (const auto& [letter, count] : counts_) total += static_cast<std::size_t>(count);
  return total;
}

std::vector<int> Multiset::sorted_letters() const {
  std::vector<int> out;
  out.reserve(size());
  for (const auto& [letter, count] : counts_) out.insert(out.end(), static_cast<std::size_t>(count), letter);
  return out;
}

std::string to_string(const Multiset& m) {
  std::string out;
  for (const auto& [letter, count] : m.counts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(letter) + ':' + std::to_string(count);
  }
  return out;
}

namespace {

void require_k(int k) {
  if (k < 1) throw InvalidInput("k must be a positive integer, got " + std::to_string(k));
}

}  // namespace

IndexPairSet descent_set_k(const Word& w, int k) {
  require_k(k);
  std::vector<IndexPair> pairs;
  const auto step = static_cast<std::size_t>(k);
  for (Position i = 1; i + step <= w.size(); ++i) {
    if (greater(w[i], w[i + step])) pairs.push_back({i, i + step});
  }
  return IndexPairSet(std::move(pairs));
}

IndexPairSet inversion_set_k(const Word& w, int k) {
  require_k(k);
  std::vector<IndexPair> pairs;
  const auto n = w.size();
  const auto window = static_cast<std::size_t>(k);
  for (Position i = 1; i <= n; ++i) {
    for (Position j = i + 1; j <= n && j - i < window; ++j) {
      if (greater(w[i], w[j])) pairs.push_back({i, j});
    }
  }
  return IndexPairSet(std::move(pairs));
}

long inversion_count_k(const Word& w, int k) {
  require_k(k);
  long count = 0;
  const auto letters = w.letters();
  const auto n = letters.size();
  const auto window = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t stop = std::min(n, i + window);
    for (std::size_t j = i + 1; j < stop; ++j) count += greater(letters[i], letters[j]) ? 1 : 0;
  }
  return count;
}

long maj_k(const Word& w, int k) {
  long total = inversion_count_k(w, k);
  const auto letters = w.letters();
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + step < letters.size(); ++i) {
    if (greater(letters[i], letters[i + step])) total += static_cast<long>(i + 1);
  }
  return total;
}

long maj(const Word& w) {
  long total = 0;
  for (Position i = 1; i < w.size(); ++i) {
    if (greater(w[i], w[i + 1])) total += static_cast<long>(i);
  }
  return total;
}

long inv(const Word& w) {
  long total = 0;
  for (Position i = 1; i <= w.size(); ++i) {
    for (Position j = i + 1; j <= w.size(); ++j) total += greater(w[i], w[j]) ? 1 : 0;
  }
  return total;
}

std::vector<int> descent_positions(const Word& w) {
  std::vector<int> out;
  for (Position i = 1; i < w.size(); ++i) {
    if (greater(w[i], w[i + 1])) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> ides(const Word& w) {
  if (!w.is_permutation()) throw InvalidInput("ides requires a permutation, got " + to_string(w));
  const auto pos = w.positions_of_letters();
  std::vector<int> out;
  for (std::size_t v = 1; v + 1 < pos.size(); ++v) {
    if (pos[v + 1] < pos[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace kmaj
