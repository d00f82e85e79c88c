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

#include "kmaj/verify.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "kmaj/distribution.hpp"
#include "kmaj/enumerate.hpp"
#include "kmaj/equivalence.hpp"
#include "kmaj/error.hpp"
#include "kmaj/io.hpp"
#include "kmaj/parallel.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/word_bijections.hpp"

namespace kmaj {

namespace {

int size_or(const SuiteOptions& o, int fallback) {
  if (o.max_size < 0) throw InvalidInput("max size must be non-negative");
  return o.max_size == 0 ? fallback : o.max_size;
}

// Runs job(i) into per-index reports and merges them in index order.
CheckReport run_jobs(std::string name, std::size_t count, unsigned threads,
                     const std::function<CheckReport(std::size_t)>& job) {
  std::vector<CheckReport> parts(count);
  parallel_for(count, threads, [&](std::size_t i) { parts[i] = job(i); });
  CheckReport out;
  out.name = std::move(name);
  for (const auto& p : parts) out.merge(p);
  return out;
}

// One job per n in [lo, hi], each producing a full report.
CheckReport run_sizes(std::string name, int lo, int hi, unsigned threads, const std::function<CheckReport(int)>& check) {
  const std::size_t count = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  auto out = run_jobs(std::move(name), count, threads, [&](std::size_t i) { return check(lo + static_cast<int>(i)); });
  out.details["sizes"] = {lo, hi};
  return out;
}

nlohmann::json positions_json(const std::set<Position>& s) {
  return nlohmann::json(std::vector<Position>(s.begin(), s.end()));
}

nlohmann::json word_input(const Word& w, int k) { return {{"word", to_json(w)}, {"k", k}}; }

nlohmann::json tableau_input(const StandardTableau& t, int k) { return {{"tableau", to_json(t)}, {"k", k}}; }

}  // namespace

CheckReport verify_mahonian_words(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  struct Job {
    Multiset m;
    std::set<Position> spacers;
  };
  std::vector<Job> jobs;
  for (int n = 0; n <= max_size; ++n) {
    for (const auto& m : multisets_of_size(static_cast<std::size_t>(n))) {
      jobs.push_back({m, {}});
      if (!options.with_spacers) continue;
      for (int s = 1; n + s <= max_size; ++s) {
        for (auto& mask : spacer_masks(static_cast<std::size_t>(n + s), static_cast<std::size_t>(s))) {
          jobs.push_back({m, std::move(mask)});
        }
      }
    }
  }
  std::vector<char> failed(jobs.size(), 0);
  auto report = run_jobs("mahonian", jobs.size(), options.threads, [&](std::size_t i) {
    const auto& job = jobs[i];
    CheckReport r;
    r.cases = 1;
    const auto result = verify_mahonian(job.m, job.spacers, max_size);
    const nlohmann::json input = {{"multiset", to_json(job.m)}, {"spacers", positions_json(job.spacers)}};
    for (std::size_t k = 1; k < result.distributions.size(); ++k) {
      if (result.equal_to_maj[k]) continue;
      auto in = input;
      in["k"] = k + 1;
      r.record({"maj_k distribution equals maj distribution", in,
                "maj: " + to_string(result.distributions[0]) + "; maj_" + std::to_string(k + 1) + ": " +
                    to_string(result.distributions[k])});
    }
    if (result.matches_q_multinomial == false) {
      r.record({"maj distribution equals q-multinomial", input,
                "maj: " + to_string(result.distributions[0]) + "; q-multinomial: " + to_string(q_multinomial(job.m))});
    }
    failed[i] = r.passed() ? 0 : 1;
    return r;
  });
  std::size_t plain_cases = 0, plain_failed = 0, masked_cases = 0, masked_failed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (jobs[i].spacers.empty()) {
      ++plain_cases;
      plain_failed += failed[i];
    } else {
      ++masked_cases;
      masked_failed += failed[i];
    }
  }
  report.details = {{"max_size", max_size},
                    {"k_max", max_size},
                    {"spacer_free", {{"cases", plain_cases}, {"failed", plain_failed}}},
                    {"with_spacers", {{"cases", masked_cases}, {"failed", masked_failed}}}};
  return report;
}

CheckReport verify_mahonian_syt(const SuiteOptions& options) {
  const int max_size = size_or(options, 8);
  std::vector<Partition> shapes;
  for (int n = 1; n <= max_size; ++n) {
    for (auto& p : Partition::all_of_size(n)) shapes.push_back(std::move(p));
  }
  auto report = run_jobs("mahonian-syt", shapes.size(), options.threads, [&](std::size_t i) {
    const Partition& shape = shapes[i];
    CheckReport r;
    const auto tableaux = enumerate_syt(shape);
    const nlohmann::json shape_input = {{"shape", to_json(shape)}};
    const auto base = syt_distribution(shape, 1);
    for (int k = 2; k <= 3; ++k) {
      const auto dist = syt_distribution(shape, k);
      if (dist != base) {
        auto in = shape_input;
        in["k"] = k;
        r.record({"maj_k distribution equals maj distribution", in,
                  "maj: " + to_string(base) + "; maj_" + std::to_string(k) + ": " + to_string(dist)});
      }
    }
    const int n = shape.size();
    for (int k = 2; k <= 3; ++k) {
      std::set<StandardTableau> images;
      for (const auto& t : tableaux) {
        ++r.cases;
        const auto image = phi_k(t, k);
        if (image.shape() != shape) r.record({"Phi preserves shape", tableau_input(t, k), to_string(image)});
        images.insert(image);
        if (maj_k(t, k - 1) != maj_k(image, k)) {
          r.record({"maj_{k-1}(T) == maj_k(Phi(T))", tableau_input(t, k),
                    "image " + to_string(image) + ": " + std::to_string(maj_k(t, k - 1)) +
                        " != " + std::to_string(maj_k(image, k))});
        }
        if (psi_k(image, k) != t) r.record({"Psi(Phi(T)) == T", tableau_input(t, k), to_string(psi_k(image, k))});
        if (phi_k(psi_k(t, k), k) != t) r.record({"Phi(Psi(T)) == T", tableau_input(t, k), to_string(psi_k(t, k))});
        if (!(image.cell_of(n) == t.cell_of(n))) r.record({"largest entry fixed", tableau_input(t, k), to_string(image)});
      }
      if (images.size() != tableaux.size()) {
        auto in = shape_input;
        in["k"] = k;
        r.record({"Phi is injective", in,
                  std::to_string(images.size()) + " images from " + std::to_string(tableaux.size()) + " tableaux"});
      }
    }
    return r;
  });
  report.details = {{"max_size", max_size}, {"shapes", shapes.size()}};
  return report;
}

CheckReport verify_phi_props(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  std::vector<Multiset> multisets;
  for (int n = 1; n <= max_size; ++n) {
    for (auto& m : multisets_of_size(static_cast<std::size_t>(n))) multisets.push_back(std::move(m));
  }
  auto report = run_jobs("phi-props", multisets.size(), options.threads, [&](std::size_t i) {
    CheckReport r;
    for_each_word(multisets[i], {}, [&](const Word& w) {
      const std::size_t n = w.size();
      const bool perm = w.is_permutation();
      for (int k = 2; k <= max_size; ++k) {
        ++r.cases;
        const Word image = phi_k(w, k);
        if (maj_k(w, k - 1) != maj_k(image, k)) {
          r.record({"maj_{k-1}(w) == maj_k(phi(w))", word_input(w, k),
                    "image " + to_string(image) + ": " + std::to_string(maj_k(w, k - 1)) +
                        " != " + std::to_string(maj_k(image, k))});
        }
        if (psi_k(image, k) != w) r.record({"psi(phi(w)) == w", word_input(w, k), to_string(psi_k(image, k))});
        if (phi_k(psi_k(w, k), k) != w) r.record({"phi(psi(w)) == w", word_input(w, k), to_string(psi_k(w, k))});
        if (Multiset::of_word(image).counts() != Multiset::of_word(w).counts()) {
          r.record({"phi preserves the multiset", word_input(w, k), to_string(image)});
        }
        if (!(image[n] == w[n])) r.record({"last letter fixed", word_input(w, k), to_string(image)});
        if (n >= static_cast<std::size_t>(k) + 1) {
          const Position p = n - static_cast<Position>(k);
          if (greater(w[p + 1], w[n]) != greater(image[p], image[n])) {
            r.record({"w_{n-k+1} > w_n iff phi(w)_{n-k} > phi(w)_n", word_input(w, k), to_string(image)});
          }
        }
        if (perm && ides(image) != ides(w)) r.record({"phi preserves ides", word_input(w, k), to_string(image)});
      }
    });
    return r;
  });
  report.details = {{"max_size", max_size}, {"k", {2, max_size}}};
  return report;
}

CheckReport verify_phi2_commute(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  return run_sizes("phi2-commute", 3, max_size, options.threads, check_phi2_commutation);
}

CheckReport verify_nclass(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  return run_sizes("nclass", 2, max_size, options.threads, check_n_class_characterization);
}

CheckReport verify_schur_shape(const SuiteOptions& options) {
  const int max_size = size_or(options, 6);
  return run_sizes("schur-shape", 1, max_size, options.threads, check_1class_schur_shape);
}

CheckReport verify_theta(const SuiteOptions& options) {
  const int k = options.k;
  if (k < 2) throw InvalidInput("theta-check needs k >= 2");
  WordMap candidate;
  if (options.candidate == "phi") {
    candidate = [k](const Word& w) { return phi_k(w, k); };
  } else if (options.candidate == "psi") {
    candidate = [k](const Word& w) { return psi_k(w, k); };
  } else if (options.candidate == "identity") {
    candidate = [](const Word& w) { return w; };
  } else {
    throw InvalidInput("unknown theta candidate '" + options.candidate + "' (expected phi, psi or identity)");
  }
  int lo = 1;
  int hi = size_or(options, 6);
  if (options.n < 0) throw InvalidInput("n must be non-negative");
  if (options.n > 0) lo = hi = options.n;
  std::vector<CheckReport> parts(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(parts.size(), options.threads,
               [&](std::size_t i) { parts[i] = check_theta_properties(candidate, k, lo + static_cast<int>(i)); });
  CheckReport out;
  out.name = "theta-check";
  std::map<std::string, bool> holds = {{"a", true}, {"b", true}, {"c", true}};
  nlohmann::json first_failure = nlohmann::json::object();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.merge(parts[i]);
    for (auto& [prop, ok] : holds) {
      const bool here = parts[i].details["properties"].value(prop, true);
      if (!here && ok) first_failure[prop] = lo + static_cast<int>(i);
      ok = ok && here;
    }
  }
  out.details = {{"candidate", options.candidate}, {"k", k}, {"sizes", {lo, hi}},
                 {"properties", holds}, {"first_failing_n", first_failure}};
  return out;
}

CheckReport verify_k4_breakdown(const SuiteOptions&) {
  const Partition shape{2, 2, 2};
  CheckReport r;
  r.name = "k4-breakdown";
  std::optional<nlohmann::json> witness;
  std::size_t failures = 0;
  for (const auto& t : enumerate_syt(shape)) {
    ++r.cases;
    const long before = maj_k(t, 3);
    const auto image = experimental::phi_k_unbounded(t, 4);
    nlohmann::json w;
    if (!image) {
      w = {{"tableau", to_json(t)}, {"reason", "Phi^(4) leaves the standard fillings"}, {"maj_3", before}};
    } else if (experimental::maj_k_unbounded(*image, 4) != before) {
      w = {{"tableau", to_json(t)},
           {"image", to_json(*image)},
           {"maj_3", before},
           {"maj_4_of_image", experimental::maj_k_unbounded(*image, 4)}};
    } else {
      continue;
    }
    ++failures;
    if (!witness) witness = std::move(w);
  }
  r.details = {{"shape", to_json(shape)}, {"failing_tableaux", failures}};
  if (witness) {
    r.details["witness"] = *witness;
  } else {
    r.record({"some tableau breaks the k = 4 transfer", {{"shape", to_json(shape)}}, "no witness found"});
  }
  return r;
}

CheckReport verify_dk_invariants(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  struct Job {
    int n;
    std::set<Position> spacers;
  };
  std::vector<Job> jobs;
  for (int n = 1; n <= max_size; ++n) {
    jobs.push_back({n, {}});
    if (!options.with_spacers) continue;
    for (int s = 1; n + s <= max_size; ++s) {
      for (auto& mask : spacer_masks(static_cast<std::size_t>(n + s), static_cast<std::size_t>(s))) {
        jobs.push_back({n, std::move(mask)});
      }
    }
  }
  auto report = run_jobs("dk-invariants", jobs.size(), options.threads,
                         [&](std::size_t i) { return check_class_invariants(jobs[i].n, jobs[i].spacers); });
  report.details = {{"max_size", max_size}, {"with_spacers", options.with_spacers}};
  return report;
}

CheckReport verify_descent_identity(const SuiteOptions& options) {
  const int max_size = size_or(options, 7);
  return run_sizes("descent-identity", 1, max_size, options.threads, [](int n) {
    CheckReport r;
    std::map<std::vector<int>, std::size_t> words;
    for_each_permutation(static_cast<std::size_t>(n), [&](const Word& w) {
      ++r.cases;
      ++words[descent_positions(w)];
      const auto pair = rsk(w);
      if (pair.p.shape() != pair.q.shape()) r.record({"RSK shapes agree", {{"word", to_json(w)}}, to_string(pair.q)});
      if (descent_positions(pair.q) != ides(w)) {
        r.record({"Des(Q) == ides(w)", {{"word", to_json(w)}}, to_string(pair.q)});
      }
    });
    std::map<std::vector<int>, std::size_t> tableaux;
    for (const auto& shape : Partition::all_of_size(n)) {
      const auto syt = enumerate_syt(shape);
      for (const auto& t : syt) tableaux[descent_positions(t)] += syt.size();
    }
    if (words != tableaux) {
      r.record({"descent classes of S_n match f^lambda-weighted SYT descent classes", {{"n", n}},
                std::to_string(words.size()) + " word classes vs " + std::to_string(tableaux.size()) + " tableau classes"});
    }
    return r;
  });
}

CheckReport verify_foata_divergence(const SuiteOptions& options) {
  const int max_size = size_or(options, 6);
  std::vector<std::size_t> differing(static_cast<std::size_t>(max_size), 0);
  std::vector<std::optional<Word>> first(static_cast<std::size_t>(max_size));
  auto report = run_jobs("foata", static_cast<std::size_t>(max_size), options.threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    CheckReport r;
    for_each_permutation(i + 1, [&](const Word& w) {
      ++r.cases;
      const Word composed = n >= 2 ? phi_range(w, n, 1) : w;
      if (maj(w) != inv(composed)) {
        r.record({"maj(w) == inv(phi^[n,1](w))", {{"word", to_json(w)}}, to_string(composed)});
      }
      const Word classical = foata(w);
      if (maj(w) != inv(classical)) r.record({"maj(w) == inv(foata(w))", {{"word", to_json(w)}}, to_string(classical)});
      if (composed != classical) {
        ++differing[i];
        if (!first[i]) first[i] = w;
      }
    });
    return r;
  });
  auto per_size = nlohmann::json::array();
  std::optional<Word> witness;
  for (std::size_t i = 0; i < differing.size(); ++i) {
    per_size.push_back({{"n", i + 1}, {"differing", differing[i]}});
    if (!witness && first[i]) witness = first[i];
  }
  report.details = {{"max_size", max_size}, {"per_size", per_size}};
  if (witness) {
    report.details["witness"] = {{"word", to_json(*witness)},
                                 {"phi_range", to_json(phi_range(*witness, static_cast<int>(witness->size()), 1))},
                                 {"foata", to_json(foata(*witness))}};
  } else {
    report.record({"phi^[n,1] differs from foata on some permutation", {{"max_size", max_size}},
                   "the two maps agree on every permutation of size <= " + std::to_string(max_size)});
  }
  return report;
}

std::vector<std::string> suite_names() {
  return {"mahonian", "mahonian-syt",  "phi-props",     "phi2-commute",     "nclass", "schur-shape",
          "theta-check", "k4-breakdown", "dk-invariants", "descent-identity", "foata"};
}

CheckReport run_suite(const std::string& name, const SuiteOptions& options) {
  using Suite = CheckReport (*)(const SuiteOptions&);
  static const std::map<std::string, Suite> suites = {
      {"mahonian", verify_mahonian_words},   {"mahonian-syt", verify_mahonian_syt},
      {"phi-props", verify_phi_props},       {"phi2-commute", verify_phi2_commute},
      {"nclass", verify_nclass},             {"schur-shape", verify_schur_shape},
      {"theta-check", verify_theta},         {"k4-breakdown", verify_k4_breakdown},
      {"dk-invariants", verify_dk_invariants}, {"descent-identity", verify_descent_identity},
      {"foata", verify_foata_divergence},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw InvalidInput("unknown suite '" + name + "'");
  auto report = it->second(options);
  report.name = name;
  return report;
}

}  // namespace kmaj
