// Copyright 2026 The tspbound Authors
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

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "tspbound/exact_oracle.hpp"
#include "tspbound/generators.hpp"
#include "tspbound/heuristics.hpp"

namespace {

using namespace tspbound;

void BM_HeldKarpSerial(benchmark::State& state) {
  const Instance inst = gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp_opt_serial(inst).value);
}
BENCHMARK(BM_HeldKarpSerial)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

void BM_HeldKarpParallel(benchmark::State& state) {
  const Instance inst = gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp_opt(inst).value);
}
BENCHMARK(BM_HeldKarpParallel)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const Instance inst = gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst).value);
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 10, 1)->Unit(benchmark::kMillisecond);

// Includes the parallel max-weight scan that fixes beta.
void BM_EuclideanInstance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 2).beta());
  }
}
BENCHMARK(BM_EuclideanInstance)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_NearestNeighbor(benchmark::State& state) {
  const Instance inst = gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(nearest_neighbor(inst).final_weight);
}
BENCHMARK(BM_NearestNeighbor)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CheapestInsertion(benchmark::State& state) {
  const Instance inst = gen_random_euclidean(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cheapest_insertion(inst).final_weight);
}
BENCHMARK(BM_CheapestInsertion)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
