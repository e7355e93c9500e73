// Copyright 2026 The Blocking Wythoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bwn/analysis.hpp"
#include "bwn/closedforms.hpp"
#include "bwn/comply.hpp"
#include "bwn/covers.hpp"
#include "bwn/solver.hpp"

namespace {

using namespace bwn;

void BM_SolveGrid(benchmark::State& state) {
  const BlockingSpec spec{static_cast<Mode>(state.range(2)), Flavor::kBlocking,
                          static_cast<uint32_t>(state.range(1))};
  const auto n = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    PGrid g = solve_grid(spec, n);
    benchmark::DoNotOptimize(g.words().data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t{n} * n);
}
BENCHMARK(BM_SolveGrid)
    ->ArgsProduct({{1024, 4096, 16384}, {2, 4}, {0}})
    ->ArgsProduct({{4096}, {4}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_SolveComply(benchmark::State& state) {
  const auto n = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    PGrid g = solve_comply({Mode::kAll, 4}, n);
    benchmark::DoNotOptimize(g.words().data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t{n} * n);
}
BENCHMARK(BM_SolveComply)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ExtractPairs(benchmark::State& state) {
  const PGrid g = solve_grid({Mode::kAll, Flavor::kBlocking, 4}, static_cast<uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_pairs(g).pairs.size());
}
BENCHMARK(BM_ExtractPairs)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_FloorPhi(benchmark::State& state) {
  uint64_t n = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(floor_phi(n));
    n = n == kFloorPhiMax ? 1 : n + 1;
  }
}
BENCHMARK(BM_FloorPhi)->Arg(1000)->Arg(int64_t{1} << 62);

void BM_ExactCover(benchmark::State& state) {
  const auto hi = state.range(0);
  const SequenceFamily fam = case3_family();
  for (auto _ : state) benchmark::DoNotOptimize(check_exact_cover(fam, 1, hi, 2, hi + 2).exact());
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_ExactCover)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
  const BlockingSpec spec{Mode::kAll, Flavor::kBlocking, static_cast<uint32_t>(state.range(0))};
  for (auto _ : state) {
    BruteForceOracle oracle(spec);
    for (Coord x = 0; x < 48; ++x)
      for (Coord y = 0; y < 48; ++y) benchmark::DoNotOptimize(oracle.value({x, y}));
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
