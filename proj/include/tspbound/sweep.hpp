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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tspbound/bound_analysis.hpp"
#include "tspbound/heuristics.hpp"
#include "tspbound/trace.hpp"

namespace tspbound {

enum class InstanceKind { euclidean, metric };

std::string_view to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);

struct SweepConfig {
  std::size_t n_min = 5;
  std::size_t n_max = 10;
  std::size_t count = 10;  // instances per size
  std::uint64_t seed = 0;
  Heuristic heuristic = Heuristic::nearest_neighbor;
  InstanceKind kind = InstanceKind::euclidean;
  bool allow_small = false;  // permit n_min in [3, 5)
};

struct SweepRun {
  std::size_t n = 0;
  std::size_t index = 0;
  std::uint64_t instance_seed = 0;
  Trace trace;
  BoundReport report;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t pr_holds = 0;
  std::size_t thelog_holds = 0;
  double max_ratio = 0.0;
};

struct SweepResult {
  std::vector<SweepRun> runs;  // ordered by (n, index)
  SweepSummary summary;
};

/// Throws DataError for an invalid range (n_min < 5 without allow_small,
/// n_min > n_max, count == 0) and LimitError for n_max above the oracle limit.
void check_sweep_config(const SweepConfig& config);

/// Per-run instance seed, a pure function of (seed, n, index).
std::uint64_t sweep_instance_seed(std::uint64_t seed, std::size_t n, std::size_t index);

Instance generate_instance(InstanceKind kind, std::size_t n, std::uint64_t seed);

/// Runs are computed concurrently; the result order never depends on it.
SweepResult run_sweep(const SweepConfig& config);

std::string sweep_csv(const SweepResult& result);

/// "pr_holds=<p>/<total> thelog_holds=<q>/<total> max_ratio=<r>"
std::string summary_line(const SweepSummary& summary);

}  // namespace tspbound
