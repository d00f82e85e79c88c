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

#include "kmaj/word_bijections.hpp"

#include <string>

#include "kmaj/error.hpp"

namespace kmaj {

namespace {

void require_step(int k) {
  if (k < 2) throw InvalidInput("bijection step k must be >= 2, got " + std::to_string(k));
}

// In-place gamma on a letter buffer (1-based j). Swapping as the chain
// descends is safe: the test at each step is symmetric in the pair just
// swapped and only reads positions below it.
void apply_gamma(std::vector<Letter>& w, std::size_t j, std::size_t k, std::vector<Position>* chosen) {
  if (j <= k) return;
  auto at = [&](std::size_t pos) { return w[pos - 1]; };
  std::size_t i = j - k;
  if (!splits(at(j), at(i), at(i + 1))) return;
  while (true) {
    std::swap(w[i - 1], w[i]);
    if (chosen) chosen->push_back(i);
    if (i <= k) break;
    const std::size_t lo = i - k;
    if (splits(at(i), at(lo), at(lo + 1)) == splits(at(i + 1), at(lo), at(lo + 1))) break;
    i = lo;
  }
}

}  // namespace

GammaIndexSet gamma_index_set(const Word& w, Position j, int k) {
  require_step(k);
  if (j < 1 || j > w.size()) {
    throw InvalidInput("gamma anchor j=" + std::to_string(j) + " outside [1, " + std::to_string(w.size()) + "]");
  }
  std::vector<Letter> scratch(w.letters().begin(), w.letters().end());
  GammaIndexSet out{{}, w.size(), j, k};
  apply_gamma(scratch, j, static_cast<std::size_t>(k), &out.indices);
  return out;
}

Word gamma(const Word& w, Position j, int k) {
  require_step(k);
  if (j < 1 || j > w.size()) {
    throw InvalidInput("gamma anchor j=" + std::to_string(j) + " outside [1, " + std::to_string(w.size()) + "]");
  }
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  apply_gamma(letters, j, static_cast<std::size_t>(k), nullptr);
  return Word(std::move(letters));
}

Word phi_k(const Word& w, int k) {
  require_step(k);
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t j = step + 1; j <= letters.size(); ++j) apply_gamma(letters, j, step, nullptr);
  return Word(std::move(letters));
}

Word psi_k(const Word& w, int k) {
  require_step(k);
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t j = letters.size(); j > step; --j) apply_gamma(letters, j, step, nullptr);
  return Word(std::move(letters));
}

Word phi_range(const Word& w, int i, int h) {
  if (h < 1 || h >= i) {
    throw InvalidInput("phi_range requires 1 <= h < i, got i=" + std::to_string(i) + " h=" + std::to_string(h));
  }
  Word out = w;
  for (int k = h + 1; k <= i; ++k) out = phi_k(out, k);
  return out;
}

Word foata(const Word& w) {
  if (w.has_spacers()) throw InvalidInput("foata is defined on spacer-free words, got " + to_string(w));
  if (w.empty()) return w;
  std::vector<Letter> image{w[1]};
  std::vector<Letter> next;
  for (Position p = 2; p <= w.size(); ++p) {
    const Letter x = w[p];
    // Cut after every letter on the same side of x as the current last letter,
    // then rotate each block's last letter to its front.
    const bool cut_small = !greater(image.back(), x);
    next.clear();
    std::size_t start = 0;
    for (std::size_t c = 0; c < image.size(); ++c) {
      const bool is_small = !greater(image[c], x);
      if (is_small == cut_small) {
        next.push_back(image[c]);
        next.insert(next.end(), image.begin() + static_cast<std::ptrdiff_t>(start),
                    image.begin() + static_cast<std::ptrdiff_t>(c));
        start = c + 1;
      }
    }
    next.insert(next.end(), image.begin() + static_cast<std::ptrdiff_t>(start), image.end());
    next.push_back(x);
    image.swap(next);
  }
  return Word(std::move(image));
}

}  // namespace kmaj
