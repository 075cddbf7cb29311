// Copyright 2026 The attdisc Authors
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

#include "attdisc/bench.hpp"
#include "attdisc/clique.hpp"
#include "attdisc/distance.hpp"
#include "attdisc/periodic.hpp"
#include "attdisc/singleton.hpp"

using namespace attdisc;

namespace {

Instance periodic_instance(int n, int m, int max_period, uint64_t seed) {
  ExperimentConfig config;
  config.n = n;
  config.m = m;
  config.max_period = max_period;
  config.seed = seed;
  return generate_instance(config, 0);
}

Instance singleton_instance(int n, int m, int k, uint64_t seed) {
  ExperimentConfig config;
  config.n = n;
  config.m = m;
  config.noise_bound = k;
  config.max_period = 1;
  config.seed = seed;
  return generate_instance(config, 0);
}

void BM_BuildPairDistanceMatrix(benchmark::State& state) {
  const Instance instance =
      periodic_instance(static_cast<int>(state.range(0)), 5, 4, 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pair_distance_matrix(instance));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPairDistanceMatrix)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CliqueDist(benchmark::State& state) {
  const Instance instance = periodic_instance(24, 4, 4, 7);
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  std::vector<int> subset;
  for (int j = 1; j <= state.range(0); ++j) subset.push_back(j);
  const PairIndex poa = triangular_index(1, 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(clique_dist(d, poa, subset));
  }
}
BENCHMARK(BM_CliqueDist)->DenseRange(4, 24, 4);

void BM_GreedySingleton(benchmark::State& state) {
  const Instance instance =
      singleton_instance(static_cast<int>(state.range(0)), 5, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_greedy_singleton(instance));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedySingleton)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ExactSingleton(benchmark::State& state) {
  const Instance instance =
      singleton_instance(static_cast<int>(state.range(0)), 5, 1, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_singleton(instance));
  }
}
BENCHMARK(BM_ExactSingleton)->RangeMultiplier(2)->Range(16, 256);

void BM_GreedyPeriodic(benchmark::State& state) {
  const Instance instance =
      periodic_instance(static_cast<int>(state.range(0)), 4, 4, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_greedy_periodic(instance));
  }
}
BENCHMARK(BM_GreedyPeriodic)->RangeMultiplier(2)->Range(16, 128);

void BM_ExactPeriodic(benchmark::State& state) {
  const Instance instance =
      periodic_instance(static_cast<int>(state.range(0)), 3, 3, 23);
  Budget budget;
  budget.max_seconds = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_periodic(instance, budget));
  }
}
BENCHMARK(BM_ExactPeriodic)->DenseRange(8, 14, 2);

}  // namespace

BENCHMARK_MAIN();
