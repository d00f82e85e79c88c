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

#include <set>
#include <utility>
#include <vector>

#include "kmaj/word.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Pairs pairs(const kmaj::IndexPairSet& s) {
  oracle::Pairs out;
  for (const auto& p : s) out.insert({p.first, p.second});
  return out;
}

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace test_support
