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

#include <filesystem>
#include <string>
#include <string_view>

#include "tspbound/bound_analysis.hpp"
#include "tspbound/instance.hpp"
#include "tspbound/trace.hpp"

namespace tspbound {

// TSPLIB subset: TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D, or EXPLICIT with
// EDGE_WEIGHT_FORMAT FULL_MATRIX. Anything else is a DataError naming the
// offending keyword or value.
Instance parse_tsplib(std::string_view text);
Instance read_tsplib(const std::filesystem::path& path);

/// FULL_MATRIX form of the effective weights. Absent arcs are written as
/// beta, so they come back as ordinary arcs.
std::string emit_tsplib(const Instance& inst);

/// Trace schema: {instance_name, heuristic, n, steps[], final_arcs[],
/// final_weight}, each step {i, a_new, a_old, m, delta_a, w_before, w_after}
/// with arcs as [u, v]. "beta_used" is written only when true.
std::string trace_to_json(const Trace& trace);

/// DataError messages name the field, e.g. "steps[2].w_after: missing".
Trace trace_from_json(std::string_view text);

std::string report_to_json(const BoundReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tspbound
