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

#pragma once

#include <cstdint>
#include <random>

#include "tspbound/instance.hpp"

namespace tspbound {

// Seeded instance generators. The stream is std::mt19937_64 seeded with the
// seed value; bounded integers come from draw_below (rejection sampling on
// the raw 64-bit output), never from std::uniform_int_distribution, whose
// output differs between standard libraries. A seed therefore names the same
// instance on every platform.

/// Uniform integer in [0, bound), bound >= 1.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// SplitMix64 finaliser; derives independent per-job seeds.
std::uint64_t mix_seed(std::uint64_t x);

inline constexpr std::int64_t kEuclideanGrid = 10000;
inline constexpr Weight kMetricMaxWeight = 1000;

/// n points uniform on the integer grid [0, 10000)^2, x then y per point,
/// rounded Euclidean weights. Named "euc-<n>-<seed>".
Instance gen_random_euclidean(std::size_t n, std::uint64_t seed);

/// Weights uniform in [1, 1000] for pairs (a < b) in row-major order, then
/// closed under all-pairs shortest paths. Named "metric-<n>-<seed>".
Instance gen_random_metric(std::size_t n, std::uint64_t seed);

/// Floyd-Warshall shortest-path closure of a symmetric matrix.
WeightMatrix metric_closure(WeightMatrix weights);

}  // namespace tspbound
