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

#include <string>
#include <vector>

#include "kmaj/report.hpp"

namespace kmaj {

struct SuiteOptions {
  // Largest word length / partition size / permutation size exercised.
  // 0 selects the suite's default.
  int max_size = 0;
  unsigned threads = 1;
  // mahonian: also run every spacer mask up to total length max_size.
  bool with_spacers = false;
  // theta-check: level k, permutation size n and candidate name
  // ("phi", "psi" or "identity").
  int k = 2;
  int n = 0;
  std::string candidate = "phi";
};

// Word distributions: maj_k equal for k = 1..max_size on every multiset of
// size <= max_size, and the maj distribution equal to the q-multinomial.
CheckReport verify_mahonian_words(const SuiteOptions& options);
// SYT distributions of maj, maj_2, maj_3 coincide for every shape of size
// <= max_size, and Phi^(2), Phi^(3) are bijections realizing the transfers.
CheckReport verify_mahonian_syt(const SuiteOptions& options);
// maj_{k-1} transfer, psi inverse, fixed tail, comparison transfer and ides
// preservation of phi^(k), over words on every multiset of size <= max_size.
CheckReport verify_phi_props(const SuiteOptions& options);
CheckReport verify_phi2_commute(const SuiteOptions& options);
CheckReport verify_nclass(const SuiteOptions& options);
CheckReport verify_schur_shape(const SuiteOptions& options);
CheckReport verify_theta(const SuiteOptions& options);
// Passes when the naive k = 4 tableau construction is shown to fail on
// SYT((2,2,2)); the witness is in details["witness"].
CheckReport verify_k4_breakdown(const SuiteOptions& options);
CheckReport verify_dk_invariants(const SuiteOptions& options);
// #{w in S_n : Des(w) = D} == sum_lambda f^lambda #{T : Des(T) = D}, and
// Des(Q) == ides(w) for the RSK pair of every w.
CheckReport verify_descent_identity(const SuiteOptions& options);
// phi^[n,1] takes maj to inv and differs from Foata's map on some
// permutation of size <= max_size.
CheckReport verify_foata_divergence(const SuiteOptions& options);

std::vector<std::string> suite_names();
// Throws InvalidInput for an unknown name.
CheckReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace kmaj
