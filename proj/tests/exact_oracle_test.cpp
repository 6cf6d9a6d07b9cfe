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

#include "tspbound/exact_oracle.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tspbound/error.hpp"
#include "tspbound/generators.hpp"
#include "tspbound/trace.hpp"

namespace tspbound {
namespace {

using testing::all_ones;
using testing::d4;

TEST(BruteForce, D4) {
  const auto weights = testing::all_tour_weights(d4());
  EXPECT_EQ(weights, (std::vector<Weight>{13, 6, 15}));
  const OracleResult r = brute_force_opt(d4());
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.tour, (std::vector<Vertex>{0, 1, 3, 2}));
  EXPECT_EQ(r.method, OracleMethod::brute);
}

TEST(BruteForce, SmallCases) {
  EXPECT_EQ(brute_force_opt(all_ones(5)).value, 5);
  EXPECT_EQ(brute_force_opt(testing::triangle345()).value, 12);
  EXPECT_THROW(brute_force_opt(all_ones(11)), LimitError);
}

TEST(HeldKarp, Examples) {
  const OracleResult r = held_karp_opt(d4());
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.tour, (std::vector<Vertex>{0, 1, 3, 2}));
  EXPECT_EQ(r.method, OracleMethod::held_karp);
  EXPECT_EQ(held_karp_opt(all_ones(16)).value, 16);
  EXPECT_EQ(held_karp_opt(testing::triangle345()).value, 12);
  EXPECT_THROW(held_karp_opt(all_ones(21)), LimitError);
}

TEST(HeldKarp, ForcedAbsentArcShowsBeta) {
  // Vertex 4 has a single finite arc; every tour needs a second one.
  PartialWeightMatrix w(5, std::vector<std::optional<Weight>>(5, 3));
  for (Vertex k = 0; k < 5; ++k) w[k][k] = 0;
  for (Vertex k : {0u, 1u, 2u}) w[k][4] = w[4][k] = std::nullopt;
  const Instance inst = make_instance(5, w, "isolated");
  EXPECT_GE(held_karp_opt(inst).value, inst.beta());
  EXPECT_EQ(held_karp_opt(inst).value, brute_force_opt(inst).value);
}

TEST(HeldKarp, ParallelMatchesSerialReference) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 3; n <= 15; ++n) {
    const Instance inst = testing::random_instance(n, rng, 20);  // many ties
    const OracleResult par = held_karp_opt(inst);
    const OracleResult ser = held_karp_opt_serial(inst);
    EXPECT_EQ(par.value, ser.value);
    EXPECT_EQ(par.tour, ser.tour);
  }
}

TEST(OracleProperty, BruteForceAndHeldKarpAgree) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 5 + trial % 6;
    const Instance inst = trial % 2 == 0 ? testing::random_instance(n, rng, 30)
                                         : gen_random_euclidean(n, trial);
    const OracleResult bf = brute_force_opt(inst);
    const OracleResult hk = held_karp_opt(inst);
    ASSERT_EQ(bf.value, hk.value);
    EXPECT_EQ(bf.tour, hk.tour);  // both return the lexicographically least minimiser
    EXPECT_EQ(tour_weight(inst, hk.tour), hk.value);
    const auto weights = testing::all_tour_weights(inst);
    EXPECT_EQ(*std::min_element(weights.begin(), weights.end()), bf.value);
  }
}

TEST(OracleProperty, RelabelingKeepsOptimum) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 6;
    const Instance inst = testing::random_instance(n, rng, 50);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    WeightMatrix w(n, std::vector<Weight>(n, 0));
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (a != b) w[perm[a]][perm[b]] = inst.weight(a, b);
      }
    }
    const Instance relabeled = make_instance(n, w, "perm");
    EXPECT_EQ(held_karp_opt(relabeled).value, held_karp_opt(inst).value);
    EXPECT_EQ(brute_force_opt(relabeled).value, brute_force_opt(inst).value);
  }
}

TEST(Optimum, Dispatch) {
  const Instance eight = gen_random_metric(8, 3);
  const OracleResult checked = optimum(eight, {.cross_check = true});
  EXPECT_EQ(checked.value, brute_force_opt(eight).value);

  const OracleResult sixteen = optimum(gen_random_euclidean(16, 2));
  EXPECT_EQ(sixteen.method, OracleMethod::held_karp);
  EXPECT_EQ(sixteen.tour.size(), 16u);

  EXPECT_THROW(optimum(gen_random_euclidean(25, 1)), LimitError);
  EXPECT_EQ(to_string(OracleMethod::held_karp), "held-karp");
}

}  // namespace
}  // namespace tspbound
