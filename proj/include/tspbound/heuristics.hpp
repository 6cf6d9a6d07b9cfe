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

#include <optional>
#include <string_view>

#include "tspbound/instance.hpp"
#include "tspbound/trace.hpp"

namespace tspbound {

enum class Heuristic { nearest_neighbor, cheapest_insertion, greedy_edge };

/// Stable identifiers: "nn", "cheapest-insertion", "greedy".
std::string_view to_string(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

// All constructors break ties by lowest vertex index, then by lexicographic
// arc order, so a given instance always yields the same trace.

/// Extends a path from `start` to its cheapest unvisited neighbour, then
/// closes the cycle. Every move adds one arc.
Trace nearest_neighbor(const Instance& inst, Vertex start = 0);

/// Best nearest-neighbour trace over every start vertex (lowest weight,
/// then lowest start).
Trace nearest_neighbor_all_starts(const Instance& inst);

/// Seeds with the cheapest arc and the third vertex closing the lightest
/// triangle (one arc per move), then repeatedly performs the insertion
/// (u,v) -> (u,k),(k,v) with the smallest weight change.
Trace cheapest_insertion(const Instance& inst);

/// Adds arcs in increasing weight order whenever they keep every degree at
/// most 2 and close no cycle, then closes the Hamiltonian path.
Trace greedy_edge(const Instance& inst);

Trace construct(const Instance& inst, Heuristic h, Vertex start = 0);

}  // namespace tspbound
