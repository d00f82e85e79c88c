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

#include "kmaj/tableau.hpp"

#include <algorithm>
#include <functional>

#include "kmaj/error.hpp"

namespace kmaj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] < 1) throw InvalidInput("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    size_ += parts_[r];
  }
}

std::vector<Partition> Partition::all_of_size(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int Partition::row_length(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t r = 0; r < p.parts().size(); ++r) {
    if (r > 0) out += ',';
    out += std::to_string(p.parts()[r]);
  }
  return out + ")";
}

namespace {

using Cells = std::vector<Cell>;

std::optional<std::vector<std::vector<int>>> rows_from_cells(const Partition& shape, std::span<const Cell> cells) {
  const int n = shape.size();
  if (cells.size() != static_cast<std::size_t>(n) + 1) return std::nullopt;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape.parts()[r]), 0);
  for (int e = 1; e <= n; ++e) {
    const Cell c = cells[static_cast<std::size_t>(e)];
    if (c.row < 1 || c.row > shape.length() || c.col < 1 || c.col > shape.row_length(c.row)) return std::nullopt;
    int& slot = rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    if (slot != 0) return std::nullopt;
    slot = e;
  }
  return rows;
}

bool rows_are_standard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  }
  return true;
}

// i attacks n, iterating the strictly-southwest clause.
bool attacks_cells(const Cells& cells, int i, int n) {
  const Cell target = cells[static_cast<std::size_t>(n)];
  for (; i < n; ++i) {
    const Cell ci = cells[static_cast<std::size_t>(i)];
    if (ci.row >= target.row) return false;
    if (ci.col >= target.col) return true;
  }
  return false;
}

bool splits_cells(const Cells& cells, int n, int a, int b) {
  return attacks_cells(cells, a, n) != attacks_cells(cells, b, n);
}

long maj_k_cells(const Cells& cells, int k) {
  const int n = static_cast<int>(cells.size()) - 1;
  long total = 0;
  // Des_j for distinct j are disjoint, so |Inv_k| is a plain sum.
  for (int d = 1; d < k; ++d) {
    for (int i = 1; i + d <= n; ++i) total += attacks_cells(cells, i, i + d) ? 1 : 0;
  }
  for (int i = 1; i + k <= n; ++i) {
    if (attacks_cells(cells, i, i + k)) total += i;
  }
  return total;
}

IndexPairSet descent_set_cells(const Cells& cells, int k) {
  const int n = static_cast<int>(cells.size()) - 1;
  std::vector<IndexPair> pairs;
  for (int i = 1; i + k <= n; ++i) {
    if (attacks_cells(cells, i, i + k)) pairs.push_back({static_cast<Position>(i), static_cast<Position>(i + k)});
  }
  return IndexPairSet(std::move(pairs));
}

// The chain is read off the unmodified filling: attacks() of the lower pair
// can consult entry i, so swapping early would change later tests.
std::vector<int> gamma_chain(const Cells& cells, int j, int k) {
  std::vector<int> chain;
  if (j <= k) return chain;
  int i = j - k;
  if (!splits_cells(cells, j, i, i + 1)) return chain;
  chain.push_back(i);
  while (i > k) {
    const int lo = i - k;
    if (splits_cells(cells, i, lo, lo + 1) == splits_cells(cells, i + 1, lo, lo + 1)) break;
    chain.push_back(lo);
    i = lo;
  }
  return chain;
}

void apply_gamma_cells(Cells& cells, int j, int k) {
  for (int i : gamma_chain(cells, j, k)) {
    std::swap(cells[static_cast<std::size_t>(i)], cells[static_cast<std::size_t>(i + 1)]);
  }
}

void require_stat_k(int k) {
  if (k < 1 || k > 3) throw InvalidInput("tableau statistics are defined for k in {1,2,3}, got " + std::to_string(k));
}

void require_bijection_k(int k) {
  if (k < 2 || k > 3) throw InvalidInput("tableau bijections are defined for k in {2,3}, got " + std::to_string(k));
}

Cells cells_copy(const StandardTableau& t) { return Cells(t.cells().begin(), t.cells().end()); }

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) throw InvalidInput("tableau rows must be nonempty");
  shape_ = Partition(parts);
  const int n = shape_.size();
  cells_.assign(static_cast<std::size_t>(n) + 1, Cell{});
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int e = rows[r][c];
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) {
        throw InvalidInput("tableau entries must be 1.." + std::to_string(n) + " each exactly once");
      }
      seen[static_cast<std::size_t>(e)] = true;
      cells_[static_cast<std::size_t>(e)] = Cell{static_cast<int>(c) + 1, static_cast<int>(r) + 1};
    }
  }
  if (!rows_are_standard(rows)) throw InvalidInput("entries must increase along rows and up columns");
  rows_ = std::move(rows);
}

std::optional<StandardTableau> StandardTableau::try_from_cells(const Partition& shape,
                                                               std::span<const Cell> cell_of_entry) {
  auto rows = rows_from_cells(shape, cell_of_entry);
  if (!rows || !rows_are_standard(*rows)) return std::nullopt;
  StandardTableau t;
  t.shape_ = shape;
  t.rows_ = std::move(*rows);
  t.cells_.assign(cell_of_entry.begin(), cell_of_entry.end());
  return t;
}

StandardTableau StandardTableau::from_cells(const Partition& shape, std::span<const Cell> cell_of_entry) {
  auto t = try_from_cells(shape, cell_of_entry);
  if (!t) throw InvalidInput("filling of shape " + to_string(shape) + " is not a standard tableau");
  return std::move(*t);
}

Cell StandardTableau::cell_of(int entry) const {
  if (entry < 1 || entry > size()) throw InvalidInput("entry " + std::to_string(entry) + " not in tableau");
  return cells_[static_cast<std::size_t>(entry)];
}

int StandardTableau::entry_at(Cell c) const {
  if (c.row < 1 || c.row > shape_.length() || c.col < 1 || c.col > shape_.row_length(c.row)) {
    throw InvalidInput("cell outside the diagram");
  }
  return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
}

std::string to_string(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out += " / ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(t.rows()[r][c]);
    }
  }
  return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.size();
  const int rows = shape.length();
  std::vector<int> filled(static_cast<std::size_t>(rows), 0);
  Cells cells(static_cast<std::size_t>(n) + 1);
  std::function<void(int)> place = [&](int entry) {
    if (entry > n) {
      out.push_back(StandardTableau::from_cells(shape, cells));
      return;
    }
    for (int r = 0; r < rows; ++r) {
      const auto ru = static_cast<std::size_t>(r);
      if (filled[ru] == shape.parts()[ru]) continue;
      if (r > 0 && filled[ru - 1] <= filled[ru]) continue;
      ++filled[ru];
      cells[static_cast<std::size_t>(entry)] = Cell{filled[ru], r + 1};
      place(entry + 1);
      --filled[ru];
    }
  };
  place(1);
  return out;
}

IndexPairSet descent_set(const StandardTableau& t) { return descent_set_cells(cells_copy(t), 1); }

std::vector<int> descent_positions(const StandardTableau& t) {
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i) {
    if (t.cell_of(i).row < t.cell_of(i + 1).row) out.push_back(i);
  }
  return out;
}

long maj(const StandardTableau& t) {
  long total = 0;
  for (int i : descent_positions(t)) total += i;
  return total;
}

bool attacks(const StandardTableau& t, int i, int n) {
  if (i < 1 || n > t.size() || i >= n) {
    throw InvalidInput("attacks requires 1 <= i < n <= " + std::to_string(t.size()) + ", got i=" + std::to_string(i) +
                       " n=" + std::to_string(n));
  }
  return attacks_cells(cells_copy(t), i, n);
}

IndexPairSet descent_set_k(const StandardTableau& t, int k) {
  require_stat_k(k);
  return descent_set_cells(cells_copy(t), k);
}

IndexPairSet inversion_set_k(const StandardTableau& t, int k) {
  require_stat_k(k);
  const Cells cells = cells_copy(t);
  IndexPairSet out;
  for (int d = 1; d < k; ++d) out = out.united_with(descent_set_cells(cells, d));
  return out;
}

long maj_k(const StandardTableau& t, int k) {
  require_stat_k(k);
  return maj_k_cells(cells_copy(t), k);
}

std::vector<int> gamma_index_set(const StandardTableau& t, int j, int k) {
  require_bijection_k(k);
  if (j < 1 || j > t.size()) throw InvalidInput("gamma anchor outside [1, " + std::to_string(t.size()) + "]");
  return gamma_chain(cells_copy(t), j, k);
}

StandardTableau gamma(const StandardTableau& t, int j, int k) {
  require_bijection_k(k);
  if (j < 1 || j > t.size()) throw InvalidInput("gamma anchor outside [1, " + std::to_string(t.size()) + "]");
  Cells cells = cells_copy(t);
  apply_gamma_cells(cells, j, k);
  return StandardTableau::from_cells(t.shape(), cells);
}

StandardTableau phi_k(const StandardTableau& t, int k) {
  require_bijection_k(k);
  Cells cells = cells_copy(t);
  for (int j = k + 1; j <= t.size(); ++j) apply_gamma_cells(cells, j, k);
  return StandardTableau::from_cells(t.shape(), cells);
}

StandardTableau psi_k(const StandardTableau& t, int k) {
  require_bijection_k(k);
  Cells cells = cells_copy(t);
  for (int j = t.size(); j > k; --j) apply_gamma_cells(cells, j, k);
  return StandardTableau::from_cells(t.shape(), cells);
}

RskPair row_insertion(const Word& w) {
  if (w.has_spacers() || !w.is_permutation()) {
    throw InvalidInput("RSK requires a spacer-free permutation, got " + to_string(w));
  }
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (Position pos = 1; pos <= w.size(); ++pos) {
    int x = w[pos].code();
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(pos)});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(static_cast<int>(pos));
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return RskPair{StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

RskPair rsk(const Word& w) {
  if (w.has_spacers() || !w.is_permutation()) {
    throw InvalidInput("RSK requires a spacer-free permutation, got " + to_string(w));
  }
  const auto pos = w.positions_of_letters();
  std::vector<int> inverse(pos.begin() + 1, pos.end());
  return row_insertion(Word::from_codes(inverse));
}

namespace experimental {

long maj_k_unbounded(const StandardTableau& t, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  return maj_k_cells(cells_copy(t), k);
}

std::optional<StandardTableau> phi_k_unbounded(const StandardTableau& t, int k) {
  if (k < 2) throw InvalidInput("k must be >= 2");
  Cells cells = cells_copy(t);
  for (int j = k + 1; j <= t.size(); ++j) {
    apply_gamma_cells(cells, j, k);
    if (!StandardTableau::try_from_cells(t.shape(), cells)) return std::nullopt;
  }
  return StandardTableau::from_cells(t.shape(), cells);
}

}  // namespace experimental

}  // namespace kmaj
