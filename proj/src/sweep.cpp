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

#include "tspbound/sweep.hpp"

#include <algorithm>
#include <exception>

#include <fmt/format.h>

#include "tspbound/error.hpp"
#include "tspbound/exact_oracle.hpp"
#include "tspbound/generators.hpp"

namespace tspbound {

std::string_view to_string(InstanceKind kind) {
  return kind == InstanceKind::euclidean ? "euclidean" : "metric";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  if (name == "euclidean") return InstanceKind::euclidean;
  if (name == "metric") return InstanceKind::metric;
  return std::nullopt;
}

void check_sweep_config(const SweepConfig& c) {
  const std::size_t floor = c.allow_small ? 3 : 5;
  if (c.n_min < floor) {
    throw DataError(fmt::format(
        "n-min {} < {}: H_n <= log2 n fails below 5 (use --allow-small to override)",
        c.n_min, floor));
  }
  if (c.n_min > c.n_max) {
    throw DataError(fmt::format("n-min {} > n-max {}", c.n_min, c.n_max));
  }
  if (c.count == 0) throw DataError("count must be >= 1");
  if (c.n_max > kHeldKarpMaxN) {
    throw LimitError(fmt::format("n-max {} exceeds the exact-oracle limit {}", c.n_max,
                                 kHeldKarpMaxN));
  }
}

std::uint64_t sweep_instance_seed(std::uint64_t seed, std::size_t n, std::size_t index) {
  return mix_seed(mix_seed(mix_seed(seed) ^ n) ^ index);
}

Instance generate_instance(InstanceKind kind, std::size_t n, std::uint64_t seed) {
  return kind == InstanceKind::euclidean ? gen_random_euclidean(n, seed)
                                         : gen_random_metric(n, seed);
}

SweepResult run_sweep(const SweepConfig& config) {
  check_sweep_config(config);
  SweepResult result;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::size_t k = 0; k < config.count; ++k) {
      SweepRun run;
      run.n = n;
      run.index = k;
      run.instance_seed = sweep_instance_seed(config.seed, n, k);
      result.runs.push_back(std::move(run));
    }
  }

  const auto jobs = static_cast<std::int64_t>(result.runs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < jobs; ++j) {
    SweepRun& run = result.runs[static_cast<std::size_t>(j)];
    try {
      const Instance inst = generate_instance(config.kind, run.n, run.instance_seed);
      run.trace = construct(inst, config.heuristic);
      run.report = build_report(run.trace, optimum(inst));
    } catch (...) {
#pragma omp critical(sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SweepSummary& s = result.summary;
  for (const SweepRun& run : result.runs) {
    ++s.total;
    s.pr_holds += run.report.pr_holds ? 1 : 0;
    s.thelog_holds += run.report.thelog_holds ? 1 : 0;
    s.max_ratio = std::max(s.max_ratio, run.report.ratio);
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = report_csv_header() + "\n";
  for (const SweepRun& run : result.runs) {
    out += report_csv_row(run.report);
    out += '\n';
  }
  return out;
}

std::string summary_line(const SweepSummary& s) {
  return fmt::format("pr_holds={}/{} thelog_holds={}/{} max_ratio={}", s.pr_holds, s.total,
                     s.thelog_holds, s.total, format_double(s.max_ratio));
}

}  // namespace tspbound
