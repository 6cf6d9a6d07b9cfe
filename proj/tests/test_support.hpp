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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tspbound/instance.hpp"
#include "tspbound/trace.hpp"

namespace tspbound::testing {

using Rational = boost::multiprecision::cpp_rational;

// d(0,1)=d(1,2)=d(2,3)=1, d(0,2)=d(1,3)=2, d(0,3)=10.
inline Instance d4() {
  return make_instance(4,
                       WeightMatrix{{0, 1, 2, 10}, {1, 0, 1, 2}, {2, 1, 0, 1}, {10, 2, 1, 0}},
                       "D4");
}

inline Instance all_ones(std::size_t n) {
  WeightMatrix w(n, std::vector<Weight>(n, 1));
  for (std::size_t k = 0; k < n; ++k) w[k][k] = 0;
  return make_instance(n, w, "K" + std::to_string(n));
}

inline Instance triangle345() {
  return euclidean_from_points({{0, 0}, {3, 0}, {0, 4}}, "tri345");
}

// Unrestricted random symmetric weights in [0, max_w]; not metric in general.
inline Instance random_instance(std::size_t n, std::mt19937_64& rng, Weight max_w = 100) {
  std::uniform_int_distribution<Weight> dist(0, max_w);
  WeightMatrix w(n, std::vector<Weight>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) w[a][b] = w[b][a] = dist(rng);
  }
  return make_instance(n, w, "rand");
}

// Weight of every distinct tour (vertex 0 first, one orientation), by plain
// enumeration. Independent of the library's oracles.
inline std::vector<Weight> all_tour_weights(const Instance& inst) {
  std::vector<Vertex> perm(inst.n() - 1);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::vector<Weight> out;
  do {
    if (perm.front() > perm.back()) continue;
    Weight w = inst.weight(0, perm.front()) + inst.weight(perm.back(), 0);
    for (std::size_t k = 0; k + 1 < perm.size(); ++k) w += inst.weight(perm[k], perm[k + 1]);
    out.push_back(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// D4 nearest-neighbour trace written out by hand: arcs (0,1),(1,2),(2,3),(0,3)
// with running weights 1, 2, 3, 13.
inline Trace d4_nn_trace_by_hand() {
  Trace t;
  t.instance_name = "D4";
  t.heuristic = "nn";
  t.n = 4;
  t.steps = {
      {0, {{0, 1}}, {}, 1, 1, 0, 1},
      {1, {{1, 2}}, {}, 1, 1, 1, 2},
      {2, {{2, 3}}, {}, 1, 1, 2, 3},
      {3, {{0, 3}}, {}, 1, 10, 3, 13},
  };
  t.final_arcs = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  t.final_weight = 13;
  return t;
}

}  // namespace tspbound::testing
