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

#include "kmaj/equivalence.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "kmaj/enumerate.hpp"
#include "kmaj/error.hpp"
#include "kmaj/io.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/word_bijections.hpp"

namespace kmaj {

namespace {

struct Triple {
  Position lower;   // position of i-1
  Position middle;  // position of i
  Position upper;   // position of i+1
};

Triple locate(const Word& w, int i) {
  if (!w.is_permutation()) throw InvalidInput("dual equivalence moves require a permutation, got " + to_string(w));
  const int m = static_cast<int>(w.letter_count());
  if (i < 2 || i > m - 1) {
    throw InvalidInput("index i=" + std::to_string(i) + " must satisfy 2 <= i <= " + std::to_string(m - 1));
  }
  const auto pos = w.positions_of_letters();
  const auto u = static_cast<std::size_t>(i);
  return {pos[u - 1], pos[u], pos[u + 1]};
}

bool between(const Triple& t) {
  return std::min(t.lower, t.upper) < t.middle && t.middle < std::max(t.lower, t.upper);
}

// Lexicographic rank of the letter sequence of a permutation word, which is
// its index in for_each_word order for a fixed spacer mask.
std::size_t letter_rank(const Word& w) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!l.is_spacer()) letters.push_back(l.code());
  }
  const std::size_t n = letters.size();
  std::size_t rank = 0;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t smaller = 0;
    for (std::size_t b = a + 1; b < n; ++b) smaller += letters[b] < letters[a] ? 1 : 0;
    rank += smaller * factorial(n - 1 - a);
  }
  return rank;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Class label of every word of S_n (with spacers), indexed by letter_rank.
struct ClassLabels {
  std::vector<Word> words;
  std::vector<std::size_t> label;  // root index, the class's smallest rank
};

ClassLabels label_classes(int n, int k, const std::set<Position>& spacers) {
  ClassLabels out;
  for_each_word(Multiset::from_multiplicities(std::vector<int>(static_cast<std::size_t>(n), 1)), spacers,
                [&](const Word& w) { out.words.push_back(w); });
  UnionFind uf(out.words.size());
  for (std::size_t r = 0; r < out.words.size(); ++r) {
    for (int i = 2; i <= n - 1; ++i) uf.unite(r, letter_rank(dual_involution(out.words[r], i, k)));
  }
  out.label.resize(out.words.size());
  for (std::size_t r = 0; r < out.words.size(); ++r) out.label[r] = uf.find(r);
  return out;
}

nlohmann::json word_case(const Word& w, int i, int k) { return {{"word", to_json(w)}, {"i", i}, {"k", k}}; }

}  // namespace

bool lies_between(const Word& w, int i) { return between(locate(w, i)); }

Word d_involution(const Word& w, int i, bool twiddle) {
  const Triple t = locate(w, i);
  if (between(t)) return w;
  std::array<Position, 3> slots{t.lower, t.middle, t.upper};
  std::sort(slots.begin(), slots.end());
  const Letter a = w[slots[0]], b = w[slots[1]], c = w[slots[2]];
  const Letter li = Letter::of(i);
  std::array<Letter, 3> image;
  if (a == li) {
    // (i, x, y) -> d: (y, x, i), d~: (x, y, i)
    image = twiddle ? std::array<Letter, 3>{b, c, a} : std::array<Letter, 3>{c, b, a};
  } else {
    // (x, y, i) -> d: (i, y, x), d~: (i, x, y)
    image = twiddle ? std::array<Letter, 3>{c, a, b} : std::array<Letter, 3>{c, b, a};
  }
  Word out = w;
  for (std::size_t s = 0; s < 3; ++s) out.set(slots[s], image[s]);
  return out;
}

int dist3(const Word& w, int i) {
  const Triple t = locate(w, i);
  const Position lo = std::min({t.lower, t.middle, t.upper});
  const Position hi = std::max({t.lower, t.middle, t.upper});
  return static_cast<int>(hi - lo);
}

Word dual_involution(const Word& w, int i, int k) {
  if (k < 1) throw InvalidInput("k must be a positive integer");
  return d_involution(w, i, dist3(w, i) <= k);
}

std::vector<EquivClass> k_classes(int n, int k, const std::set<Position>& spacers) {
  if (n < 1) throw InvalidInput("k_classes requires n >= 1");
  if (k < 1) throw InvalidInput("k must be a positive integer");
  const ClassLabels labels = label_classes(n, k, spacers);
  std::vector<EquivClass> out;
  std::vector<std::size_t> slot(labels.words.size(), 0);
  for (std::size_t r = 0; r < labels.words.size(); ++r) {
    const std::size_t root = labels.label[r];
    if (root == r) {
      slot[r] = out.size();
      EquivClass c;
      c.k = k;
      c.shared_des_k = descent_set_k(labels.words[r], k);
      c.shared_inv_count = inversion_count_k(labels.words[r], k);
      out.push_back(std::move(c));
    }
    out[slot[root]].members.push_back(labels.words[r]);
  }
  return out;
}

CheckReport check_class_invariants(int n, const std::set<Position>& spacers) {
  CheckReport report;
  report.name = "dk-invariants";
  const auto total = static_cast<int>(static_cast<std::size_t>(n) + spacers.size());
  for_each_word(Multiset::from_multiplicities(std::vector<int>(static_cast<std::size_t>(n), 1)), spacers,
                [&](const Word& w) {
                  for (int i = 2; i <= n - 1; ++i) {
                    for (int k = 1; k <= total; ++k) {
                      ++report.cases;
                      const Word image = dual_involution(w, i, k);
                      if (dual_involution(image, i, k) != w) {
                        report.record({"involution", word_case(w, i, k), "image " + to_string(image)});
                      }
                      if (descent_set_k(image, k) != descent_set_k(w, k)) {
                        report.record({"des_k constant", word_case(w, i, k), "image " + to_string(image)});
                      }
                      if (inversion_count_k(image, k) != inversion_count_k(w, k)) {
                        report.record({"inv_k constant", word_case(w, i, k), "image " + to_string(image)});
                      }
                    }
                  }
                });
  report.details = {{"n", n}, {"spacers", std::vector<Position>(spacers.begin(), spacers.end())}};
  return report;
}

CheckReport check_phi2_commutation(int n) {
  if (n < 3) throw InvalidInput("check_phi2_commutation requires n >= 3");
  CheckReport report;
  report.name = "phi2-commute";
  for_each_permutation(static_cast<std::size_t>(n), [&](const Word& w) {
    for (int i = 2; i <= n - 1; ++i) {
      if (lies_between(w, i)) continue;
      ++report.cases;
      const Word lhs = phi_k(dual_involution(w, i, 1), 2);
      const Word rhs = dual_involution(phi_k(w, 2), i, 2);
      if (lhs != rhs) {
        report.record({"phi2(D1(w)) == D2(phi2(w))", word_case(w, i, 1),
                       "lhs " + to_string(lhs) + ", rhs " + to_string(rhs)});
      }
    }
  });
  report.details = {{"n", n}};
  return report;
}

CheckReport check_n_class_characterization(int n) {
  if (n < 2) throw InvalidInput("check_n_class_characterization requires n >= 2");
  CheckReport report;
  report.name = "nclass";
  const ClassLabels labels = label_classes(n, n, {});
  const auto un = static_cast<Position>(n);
  auto key = [&](const Word& w) { return std::pair{inv(w), greater(w[1], w[un])}; };

  std::map<std::size_t, std::pair<long, bool>> key_of_class;
  std::map<std::pair<long, bool>, std::size_t> class_of_key;
  for (std::size_t r = 0; r < labels.words.size(); ++r) {
    ++report.cases;
    const Word& w = labels.words[r];
    const auto k = key(w);
    const std::size_t cls = labels.label[r];
    auto [it, fresh] = key_of_class.emplace(cls, k);
    if (!fresh && it->second != k) {
      report.record({"statistics constant on n-class", {{"word", to_json(w)}},
                     "differs from class representative " + to_string(labels.words[cls])});
    }
    auto [kit, kfresh] = class_of_key.emplace(k, cls);
    if (!kfresh && kit->second != cls) {
      report.record({"statistics separate n-classes", {{"word", to_json(w)}},
                     "same (inv, w_1 > w_n) as class of " + to_string(labels.words[kit->second])});
    }
  }

  for (const Word& w : labels.words) {
    for (int i = 2; i <= n - 1; ++i) {
      if (lies_between(w, i)) continue;
      ++report.cases;
      const Word a = phi_range(w, n, 1);
      const Word b = phi_range(d_involution(w, i, false), n, 1);
      if (labels.label[letter_rank(a)] != labels.label[letter_rank(b)]) {
        report.record({"phi[n,1](w) ~n phi[n,1](d_i(w))", word_case(w, i, 1),
                       to_string(a) + " and " + to_string(b) + " lie in different n-classes"});
      }
    }
  }
  report.details = {{"n", n}, {"classes", key_of_class.size()}};
  return report;
}

CheckReport check_theta_properties(const WordMap& candidate, int k, int n) {
  if (k < 2) throw InvalidInput("theta checks require k >= 2");
  if (n < 1) throw InvalidInput("theta checks require n >= 1");
  CheckReport report;
  report.name = "theta-check";
  const ClassLabels prev = label_classes(n, k - 1, {});
  const ClassLabels next = label_classes(n, k, {});
  const auto un = static_cast<Position>(n);
  const auto uk = static_cast<Position>(k);

  std::vector<Word> images;
  images.reserve(prev.words.size());
  for (const Word& w : prev.words) {
    Word image;
    try {
      image = candidate(w);
    } catch (const std::exception& e) {
      throw InvalidInput("candidate is not total on S_" + std::to_string(n) + ": " + e.what());
    }
    if (image.size() != w.size() || image.has_spacers() || !image.is_permutation()) {
      throw InvalidInput("candidate maps " + to_string(w) + " outside S_" + std::to_string(n));
    }
    images.push_back(std::move(image));
  }

  bool a_ok = true, b_ok = true, c_ok = true;
  std::vector<bool> hit(images.size(), false);
  for (std::size_t r = 0; r < images.size(); ++r) {
    const Word& w = prev.words[r];
    const Word& t = images[r];
    ++report.cases;
    const std::size_t target = letter_rank(t);
    if (hit[target]) {
      a_ok = false;
      report.record({"a: bijective", {{"word", to_json(w)}}, "image " + to_string(t) + " already hit"});
    }
    hit[target] = true;
    if (t[un] != w[un]) {
      a_ok = false;
      report.record({"a: last letter fixed", {{"word", to_json(w)}}, "image " + to_string(t)});
    }
    if (un > uk && greater(w[un - uk + 1], w[un]) != greater(t[un - uk], t[un])) {
      a_ok = false;
      report.record({"a: last comparison transfer", {{"word", to_json(w)}}, "image " + to_string(t)});
    }
    if (ides(w) != ides(t)) {
      a_ok = false;
      report.record({"a: ides preserved", {{"word", to_json(w)}}, "image " + to_string(t)});
    }
    if (maj_k(w, k - 1) != maj_k(t, k)) {
      b_ok = false;
      report.record({"b: maj_{k-1}(w) == maj_k(theta(w))", {{"word", to_json(w)}, {"k", k}},
                     "maj_{k-1}=" + std::to_string(maj_k(w, k - 1)) + ", maj_k(image)=" + std::to_string(maj_k(t, k))});
    }
    for (int i = 2; i <= n - 1; ++i) {
      const Word u = dual_involution(w, i, k - 1);
      if (u == w) continue;
      ++report.cases;
      const Word& tu = images[letter_rank(u)];
      if (next.label[target] != next.label[letter_rank(tu)]) {
        c_ok = false;
        report.record({"c: w ~(k-1) u implies theta(w) ~k theta(u)",
                       {{"word", to_json(w)}, {"u", to_json(u)}, {"i", i}, {"k", k}},
                       "images " + to_string(t) + " and " + to_string(tu) + " lie in different k-classes"});
      }
    }
  }
  report.details = {{"n", n}, {"k", k}, {"properties", {{"a", a_ok}, {"b", b_ok}, {"c", c_ok}}}};
  return report;
}

CheckReport check_1class_schur_shape(int n) {
  if (n < 1) throw InvalidInput("check_1class_schur_shape requires n >= 1");
  CheckReport report;
  report.name = "schur-shape";
  using DescentMultiset = std::vector<std::vector<int>>;
  std::vector<std::pair<Partition, DescentMultiset>> shapes;
  for (const auto& lambda : Partition::all_of_size(n)) {
    DescentMultiset d;
    for (const auto& t : enumerate_syt(lambda)) d.push_back(descent_positions(t));
    std::sort(d.begin(), d.end());
    shapes.emplace_back(lambda, std::move(d));
  }
  std::map<std::string, int> classes_per_shape;
  for (const auto& c : k_classes(n, 1)) {
    ++report.cases;
    DescentMultiset d;
    for (const auto& w : c.members) d.push_back(ides(w));
    std::sort(d.begin(), d.end());
    auto match = std::find_if(shapes.begin(), shapes.end(), [&](const auto& s) { return s.second == d; });
    if (match == shapes.end()) {
      auto members = nlohmann::json::array();
      for (const auto& w : c.members) members.push_back(to_json(w));
      report.record({"1-class matches an SYT descent multiset", {{"members", members}}, "no shape matches"});
    } else {
      ++classes_per_shape[to_string(match->first)];
    }
  }
  report.details = {{"n", n}, {"classes_per_shape", classes_per_shape}};
  return report;
}

}  // namespace kmaj
