// Copyright 2026 The coopgame Authors
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

#include <random>
#include <vector>

#include "coopgame/inventory.hpp"
#include "coopgame/solutions.hpp"
#include "coopgame/verify.hpp"

namespace {

using namespace coopgame;

PAdditiveGame sample_game(double p, int n) {
  std::mt19937_64 rng(0xBE5Cu + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> value(0.2, 3.0);
  std::vector<double> singles(static_cast<std::size_t>(n));
  for (double& v : singles) v = value(rng);
  return PAdditiveGame(p, std::move(singles));
}

void BM_Expand(benchmark::State& state) {
  const PAdditiveGame g = sample_game(-1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g.expand());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Expand)->DenseRange(10, 18, 4)->Complexity();

void BM_ModifiedSoc(benchmark::State& state) {
  const PAdditiveGame g = sample_game(2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(modified_soc(g));
}
BENCHMARK(BM_ModifiedSoc)->DenseRange(8, 20, 4);

void BM_PmasSoc(benchmark::State& state) {
  const PAdditiveGame g = sample_game(-1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pmas_soc(g));
}
BENCHMARK(BM_PmasSoc)->DenseRange(6, 12, 2);

void BM_IsConcave(benchmark::State& state) {
  const TuGame e = sample_game(2.0, static_cast<int>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(is_concave(e));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsConcave)->DenseRange(6, 12, 2)->Complexity();

void BM_PermutationalConcavity(benchmark::State& state) {
  const TuGame e = sample_game(-1.0, static_cast<int>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(is_permutationally_concave(e));
}
BENCHMARK(BM_PermutationalConcavity)->DenseRange(4, 7, 1);

void BM_CoreBounds(benchmark::State& state) {
  const TuGame e = sample_game(-1.0, static_cast<int>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(core_bounds(e, Orientation::cost));
}
BENCHMARK(BM_CoreBounds)->DenseRange(3, 8, 1);

void BM_CoalitionSaving(benchmark::State& state) {
  std::mt19937_64 rng(0xCAFE);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  InventorySituation sit;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i)
    sit.firms.push_back(Firm{u(rng), u(rng), u(rng), 1e9});
  sit.a = 2.0;
  sit.k = 0.8;
  sit.P = 9.0;
  const Coalition N = Coalition::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(coalition_saving(sit, N));
}
BENCHMARK(BM_CoalitionSaving)->DenseRange(2, 12, 2);

}  // namespace

BENCHMARK_MAIN();
