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

#include <cstddef>
#include <string_view>
#include <vector>

#include "tspbound/instance.hpp"

namespace tspbound {

enum class OracleMethod { brute, held_karp };

std::string_view to_string(OracleMethod method);

// Optimal tour. `tour` starts at vertex 0 and is the lexicographically least
// minimiser, which also fixes its orientation (tour[1] < tour.back()).
struct OracleResult {
  Weight value = 0;
  std::vector<Vertex> tour;
  OracleMethod method = OracleMethod::held_karp;
};

inline constexpr std::size_t kBruteForceMaxN = 10;
inline constexpr std::size_t kHeldKarpMaxN = 20;

/// Enumerates all (n-1)!/2 tours. LimitError outside 3 <= n <= 10.
OracleResult brute_force_opt(const Instance& inst);

/// Held-Karp over (subset, endpoint) states; subsets of equal size are
/// filled in parallel. LimitError outside 3 <= n <= 20.
OracleResult held_karp_opt(const Instance& inst);

/// Single-threaded Held-Karp in plain subset order. Reference for
/// held_karp_opt.
OracleResult held_karp_opt_serial(const Instance& inst);

struct OptimumOptions {
  // Also run brute force (n <= 10) and require agreement.
  bool cross_check = false;
};

/// Held-Karp, optionally cross-checked. n > 20 is a LimitError; there is no
/// heuristic fallback.
OracleResult optimum(const Instance& inst, OptimumOptions options = {});

}  // namespace tspbound
