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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kmaj {

// 1-based index into a word.
using Position = std::size_t;

// A letter of a word: a positive integer or a spacer. Spacers are
// incomparable to every letter, so there is deliberately no ordering
// operator; use greater() and splits().
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter spacer() { return Letter(); }
  // Throws InvalidInput if value < 1.
  static Letter of(int value);

  constexpr bool is_spacer() const { return value_ == 0; }
  // Letter value, or 0 for a spacer.
  constexpr int code() const { return value_; }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  explicit constexpr Letter(int value) : value_(value) {}
  int value_ = 0;
};

// a > b; false whenever either side is a spacer.
constexpr bool greater(Letter a, Letter b) {
  return !a.is_spacer() && !b.is_spacer() && a.code() > b.code();
}

// x splits the pair (a, b) iff a <= x < b or b <= x < a. False whenever any
// argument is a spacer.
constexpr bool splits(Letter x, Letter a, Letter b) {
  if (x.is_spacer() || a.is_spacer() || b.is_spacer()) return false;
  const int xv = x.code(), av = a.code(), bv = b.code();
  return (av <= xv && xv < bv) || (bv <= xv && xv < av);
}

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  // 0 encodes a spacer; negative values throw InvalidInput.
  Word(std::initializer_list<int> codes);
  static Word from_codes(std::span<const int> codes);
  // Identity permutation 1 2 ... n.
  static Word identity(std::size_t n);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Unchecked 1-based access.
  Letter operator[](Position pos) const { return letters_[pos - 1]; }
  // Checked 1-based access.
  Letter at(Position pos) const;
  void set(Position pos, Letter letter);
  // Interchanges the letters at positions pos and pos + 1.
  void swap_adjacent(Position pos) { std::swap(letters_[pos - 1], letters_[pos]); }

  std::span<const Letter> letters() const { return letters_; }
  std::vector<int> codes() const;

  // Number of non-spacer letters.
  std::size_t letter_count() const;
  // Largest letter value, 0 if there are none.
  int max_letter() const;
  std::vector<Position> spacer_positions() const;
  bool has_spacers() const;
  // True iff the non-spacer letters are exactly {1, ..., m}, each once.
  bool is_permutation() const;
  // position_of()[v] is the position of letter v (index 0 unused).
  // Requires is_permutation().
  std::vector<Position> positions_of_letters() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Canonical lexicographic order on letter codes (spacers first). This is
  // an ordering of words for reproducible output, not of letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// Space-separated rendering; spacers print as `_`.
std::string to_string(const Word& w);

struct IndexPair {
  Position first = 0;
  Position second = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// Sorted set of position pairs (i, j) with i < j.
class IndexPairSet {
 public:
  IndexPairSet() = default;
  explicit IndexPairSet(std::vector<IndexPair> pairs);
  IndexPairSet(std::initializer_list<IndexPair> pairs)
      : IndexPairSet(std::vector<IndexPair>(pairs)) {}

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(IndexPair p) const;
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }
  const std::vector<IndexPair>& pairs() const { return pairs_; }

  IndexPairSet united_with(const IndexPairSet& other) const;

  friend bool operator==(const IndexPairSet&, const IndexPairSet&) = default;

 private:
  std::vector<IndexPair> pairs_;
};

class Multiset {
 public:
  Multiset() = default;
  // letter -> multiplicity; letters >= 1, multiplicities >= 1.
  explicit Multiset(std::map<int, int> counts);
  Multiset(std::initializer_list<int> letters);
  static Multiset of_word(const Word& w);
  // Multiset {1^c1, 2^c2, ...} from a vector of multiplicities.
  static Multiset from_multiplicities(std::span<const int> multiplicities);

  std::size_t size() const;
  bool empty() const { return counts_.empty(); }
  const std::map<int, int>& counts() const { return counts_; }
  // Letters in weakly increasing order.
  std::vector<int> sorted_letters() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<int, int> counts_;
};

std::string to_string(const Multiset& m);

// Des_k(w) = {(i, i+k) : w_i > w_{i+k}}. k >= 1.
IndexPairSet descent_set_k(const Word& w, int k);
// Inv_k(w) = {(i, j) : 0 < j - i < k, w_i > w_j}. k >= 1.
IndexPairSet inversion_set_k(const Word& w, int k);
// |Inv_k(w)| + sum of i over (i, i+k) in Des_k(w). Allocation-free.
long maj_k(const Word& w, int k);
long inversion_count_k(const Word& w, int k);

long maj(const Word& w);
long inv(const Word& w);
// Classical descent positions {i : w_i > w_{i+1}}.
std::vector<int> descent_positions(const Word& w);
// Descent set of the inverse permutation: {i : i+1 appears to the left of i}.
// Throws InvalidInput unless w.is_permutation().
std::vector<int> ides(const Word& w);

}  // namespace kmaj
