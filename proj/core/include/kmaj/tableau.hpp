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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmaj/word.hpp"

namespace kmaj {

// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Every partition of n, parts in reverse lexicographic order ((n) first).
  static std::vector<Partition> all_of_size(int n);

  std::span<const int> parts() const { return parts_; }
  // Number of cells.
  int size() const { return size_; }
  // Number of rows.
  int length() const { return static_cast<int>(parts_.size()); }
  // Length of row `row` (1-based, bottom row first); 0 beyond the last row.
  int row_length(int row) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Partition& p);

// Lattice-quadrant cell; row 1 is the bottom row (French convention).
struct Cell {
  int col = 0;
  int row = 0;
  friend bool operator==(Cell, Cell) = default;
};

// A standard filling with entries increasing along rows and up columns.
// Rows are stored bottom row first.
class StandardTableau {
 public:
  // Throws InvalidInput unless rows form a standard tableau of partition shape.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  // Filling of `shape` given by entry -> cell. Throws InvalidInput unless it
  // is standard.
  static StandardTableau from_cells(const Partition& shape, std::span<const Cell> cell_of_entry);
  // Same, but returns nullopt instead of throwing when the filling is not
  // standard.
  static std::optional<StandardTableau> try_from_cells(const Partition& shape, std::span<const Cell> cell_of_entry);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // cells()[e] is the cell holding entry e; index 0 unused.
  std::span<const Cell> cells() const { return cells_; }
  Cell cell_of(int entry) const;
  int entry_at(Cell c) const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  StandardTableau() = default;
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;
};

// Bottom-up rows separated by " / ", e.g. "1 3 4 7 / 2 5 6 / 8".
std::string to_string(const StandardTableau& t);

// Every standard tableau of the shape, each once, in a fixed order.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// Des(T) = {(i, i+1) : i lies strictly south of i+1}.
IndexPairSet descent_set(const StandardTableau& t);
std::vector<int> descent_positions(const StandardTableau& t);
long maj(const StandardTableau& t);

// i attacks n (i < n): i lies strictly south and weakly east of n, or i lies
// strictly southwest of n and i+1 attacks n. Throws unless 1 <= i < n <= |T|.
bool attacks(const StandardTableau& t, int i, int n);

// Tableau statistics, defined for k in {1, 2, 3}; other k throw InvalidInput.
// Des_k(T) = {(i, i+k) : i attacks i+k}, Inv_k(T) = union of Des_j(T), j < k.
IndexPairSet descent_set_k(const StandardTableau& t, int k);
IndexPairSet inversion_set_k(const StandardTableau& t, int k);
long maj_k(const StandardTableau& t, int k);

// Tableau analogue of the word gamma: n splits (a, b) iff exactly one of a, b
// attacks n. k in {2, 3}.
std::vector<int> gamma_index_set(const StandardTableau& t, int j, int k);
StandardTableau gamma(const StandardTableau& t, int j, int k);
// gamma_n o ... o gamma_1 (T); maj_{k-1}(T) == maj_k(phi_k(T, k)). k in {2, 3}.
StandardTableau phi_k(const StandardTableau& t, int k);
// Inverse of phi_k: the gammas composed in reverse order.
StandardTableau psi_k(const StandardTableau& t, int k);

struct RskPair {
  StandardTableau p;
  StandardTableau q;
};

// Row-insertion RSK of w^{-1}: shape(P) == shape(Q) and Des(Q) == ides(w)
// (Q is the insertion tableau of w itself, P its recording tableau).
// Requires a spacer-free permutation.
RskPair rsk(const Word& w);

// Classical row insertion of the letters of a spacer-free permutation.
RskPair row_insertion(const Word& w);

namespace experimental {

// The same attack-based definitions with no bound on k. Only k <= 3 is
// known to give a Mahonian statistic; larger k exists to exhibit where the
// construction fails.
long maj_k_unbounded(const StandardTableau& t, int k);
// gamma_n o ... o gamma_1 with the tableau splitting rule at any k >= 2.
// Returns nullopt if some intermediate filling is not standard.
std::optional<StandardTableau> phi_k_unbounded(const StandardTableau& t, int k);

}  // namespace experimental

}  // namespace kmaj
