// Copyright 2026 The netctrl Authors. All Rights Reserved.
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

#include <random>

#include "fixtures.h"
#include "netctrl/controllability.h"
#include "netctrl/errors.h"
#include "netctrl/flow_linking.h"
#include "netctrl/numeric_oracle.h"

namespace netctrl {
namespace {

// Random sparse system with mean degree 3 whose targets are all linkable.
StructuredSystem SparseSystem(int n, int num_targets) {
  for (std::uint64_t seed = n;; ++seed) {
    std::mt19937_64 rng(seed);
    StructuredSystem sys(n, testing::RandomSparseEdges(n, 3LL * n, rng),
                         testing::RandomSubset(n, std::max(1, n / 100), rng),
                         testing::RandomSubset(n, num_targets, rng));
    if (max_linking_size(sys.StateGraph(), sys.available(), sys.targets()) ==
        num_targets)
      return sys;
  }
}

void BM_MaxLinkingSize(benchmark::State& state) {
  const StructuredSystem sys =
      SparseSystem(static_cast<int>(state.range(0)), 10);
  const Digraph g = sys.StateGraph();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        max_linking_size(g, sys.available(), sys.targets()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxLinkingSize)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 18)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_ClassifyNodes(benchmark::State& state) {
  const StructuredSystem sys =
      SparseSystem(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(classify_nodes(sys));
    } catch (const UnsolvableError&) {
      state.SkipWithError("instance is unsolvable");
      break;
    }
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyNodes)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 17)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_TransferRank(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  const StructuredSystem sys = testing::RandomIoSystem(n, 3, 3, 0.1, rng);
  const NumericInstance inst = instantiate(sys, 1);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_rank(inst));
}
BENCHMARK(BM_TransferRank)->Arg(10)->Arg(20)->Arg(30);

}  // namespace
}  // namespace netctrl

BENCHMARK_MAIN();
