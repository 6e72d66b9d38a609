// Copyright 2026 The defall Authors.
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

#include "defall/alliance.h"
#include "defall/brute_enum.h"
#include "defall/families.h"
#include "defall/tree.h"
#include "defall/tree_algorithms.h"

namespace defall {
namespace {

void BM_BruteCountPathLmda(benchmark::State& state) {
  const Graph g = GenerateFamily({Family::kPath, static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountAlliances(g, AllianceKind::kLocallyMinimal));
  }
}
BENCHMARK(BM_BruteCountPathLmda)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_BruteCountDiamondGmda(benchmark::State& state) {
  const Graph g = GenerateFamily({Family::kDiamond, static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountAlliances(g, AllianceKind::kGloballyMinimal));
  }
}
BENCHMARK(BM_BruteCountDiamondGmda)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);

void BM_TreeEnumerateSpider(benchmark::State& state) {
  const Graph g = GenerateFamily({Family::kSpider, static_cast<int>(state.range(0))});
  std::uint64_t emitted = 0;
  for (auto _ : state) {
    emitted = CountGmdaTree(g);
    benchmark::DoNotOptimize(emitted);
  }
  state.counters["alliances"] = static_cast<double>(emitted);
  state.counters["per_alliance"] = benchmark::Counter(
      static_cast<double>(emitted) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_TreeEnumerateSpider)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_TreeEnumerateRandom(benchmark::State& state) {
  const Graph t = RandomTree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(CountGmdaTree(t));
}
BENCHMARK(BM_TreeEnumerateRandom)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_ExtensionSolverPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph t = GenerateFamily({Family::kPath, n});
  TreeExtensionSolver solver(t);
  const VertexSet forced(n, {n / 2});
  const VertexSet forbidden(n);
  for (auto _ : state) benchmark::DoNotOptimize(solver.Solve(forced, forbidden));
}
BENCHMARK(BM_ExtensionSolverPath)->RangeMultiplier(8)->Range(64, 4096);

void BM_GloballyMinimalCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenerateFamily({Family::kDiamond, n});
  VertexSet a(g.order(), {g.VertexOf("u1")});
  for (int i = 1; i <= (n - 2) / 2; ++i) a.insert(g.VertexOf("v" + std::to_string(i)));
  AllianceChecker checker(g);
  for (auto _ : state) benchmark::DoNotOptimize(checker.IsGloballyMinimal(a));
}
BENCHMARK(BM_GloballyMinimalCheck)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace
}  // namespace defall

BENCHMARK_MAIN();
