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

#include "tspbound/generators.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t reject_from = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > reject_from);
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Instance gen_random_euclidean(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw DataError(fmt::format("instance needs at least 3 vertices, got {}", n));
  std::mt19937_64 rng(seed);
  std::vector<Point> points(n);
  for (Point& p : points) {
    p.x = static_cast<double>(draw_below(rng, kEuclideanGrid));
    p.y = static_cast<double>(draw_below(rng, kEuclideanGrid));
  }
  return euclidean_from_points(std::move(points), fmt::format("euc-{}-{}", n, seed));
}

WeightMatrix metric_closure(WeightMatrix w) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a == k) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == k) continue;
        w[a][b] = std::min(w[a][b], w[a][k] + w[k][b]);
      }
    }
  }
  return w;
}

Instance gen_random_metric(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw DataError(fmt::format("instance needs at least 3 vertices, got {}", n));
  std::mt19937_64 rng(seed);
  WeightMatrix w(n, std::vector<Weight>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      w[a][b] = w[b][a] = 1 + static_cast<Weight>(draw_below(rng, kMetricMaxWeight));
    }
  }
  return make_instance(n, metric_closure(std::move(w)), fmt::format("metric-{}-{}", n, seed));
}

}  // namespace tspbound
