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

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kmaj {

struct Violation {
  std::string property;
  // Full input object reproducing the failure.
  nlohmann::json input;
  std::string detail;
};

// Outcome of an exhaustive check. At most max_recorded violations are kept;
// violation_count counts all of them.
struct CheckReport {
  static constexpr std::size_t max_recorded = 16;

  std::string name;
  std::size_t cases = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return violation_count == 0; }
  void record(Violation v);
  // Appends other's cases and violations (recorded ones in order).
  void merge(const CheckReport& other);
};

nlohmann::json to_json(const CheckReport& r);

}  // namespace kmaj
