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

#include <benchmark/benchmark.h>

#include "kmaj/distribution.hpp"
#include "kmaj/enumerate.hpp"
#include "kmaj/equivalence.hpp"
#include "kmaj/tableau.hpp"
#include "kmaj/word_bijections.hpp"

namespace {

using namespace kmaj;

void BM_MajK(benchmark::State& state) {
  const auto words = permutations(static_cast<std::size_t>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    long total = 0;
    for (const auto& w : words) total += maj_k(w, k);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(words.size()));
}
BENCHMARK(BM_MajK)->Args({7, 1})->Args({7, 3})->Args({7, 7});

void BM_PhiK(benchmark::State& state) {
  const auto words = permutations(static_cast<std::size_t>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(phi_k(w, k));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(words.size()));
}
BENCHMARK(BM_PhiK)->Args({7, 2})->Args({7, 4})->Args({8, 3});

void BM_PhiRange(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto words = permutations(static_cast<std::size_t>(n));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(phi_range(w, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(words.size()));
}
BENCHMARK(BM_PhiRange)->Arg(6)->Arg(7);

void BM_KClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(k_classes(n, k));
}
BENCHMARK(BM_KClasses)->Args({6, 1})->Args({7, 2})->Unit(benchmark::kMillisecond);

void BM_EnumerateSyt(benchmark::State& state) {
  const Partition shape{4, 3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_syt(shape));
}
BENCHMARK(BM_EnumerateSyt);

void BM_SytDistribution(benchmark::State& state) {
  const Partition shape{4, 3, 2, 1};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syt_distribution(shape, k));
}
BENCHMARK(BM_SytDistribution)->Arg(1)->Arg(2)->Arg(3);

void BM_WordDistribution(benchmark::State& state) {
  const Multiset m{1, 1, 2, 2, 3, 3, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(word_distribution(m, {}, WordStatistic::maj_k, 3));
}
BENCHMARK(BM_WordDistribution)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
