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

#include "kmaj/report.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "kmaj/parallel.hpp"

namespace kmaj {

void CheckReport::record(Violation v) {
  ++violation_count;
  if (violations.size() < max_recorded) violations.push_back(std::move(v));
}

void CheckReport::merge(const CheckReport& other) {
  cases += other.cases;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= max_recorded) break;
    violations.push_back(v);
  }
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json out;
  out["suite"] = r.name;
  out["passed"] = r.passed();
  out["cases"] = r.cases;
  out["violation_count"] = r.violation_count;
  out["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    out["violations"].push_back({{"property", v.property}, {"input", v.input}, {"detail", v.detail}});
  }
  out["details"] = r.details;
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("KMAJ_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace kmaj
