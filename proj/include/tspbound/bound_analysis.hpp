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
#include <string>
#include <vector>

#include "tspbound/exact_oracle.hpp"
#include "tspbound/trace.hpp"

namespace tspbound {

/// H_n = sum_{i=1..n} 1/i with compensated summation. DataError for n = 0.
double harmonic(std::size_t n);

struct HarmonicRow {
  std::size_t n = 0;
  double harmonic = 0.0;
  double log2n = 0.0;
  bool holds = false;  // H_n <= log2 n
};

/// One row per n in 1..n_max. The inequality fails for n <= 4 only.
std::vector<HarmonicRow> harmonic_vs_log(std::size_t n_max);

// Sum of relative weight changes delta_a / w_before over the construction.
struct PrSum {
  double value = 0.0;             // over every step with w_before > 0
  std::size_t excluded = 0;       // steps with w_before == 0
  double value_from_i2 = 0.0;     // same sum restricted to i >= 2
};

PrSum pr_sum(const Trace& trace);

struct BoundReport {
  std::string instance;
  std::string heuristic;
  std::size_t n = 0;
  Weight opt = 0;
  Weight final = 0;
  double ratio = 0.0;
  double pr_sum = 0.0;
  std::size_t pr_excluded = 0;
  double pr_sum_from_i2 = 0.0;
  bool avarc_all = false;
  std::vector<std::size_t> avarc_violations;  // positions in trace.steps
  std::vector<std::int64_t> step_m;
  std::int64_t m_max = 0;
  double harmonic = 0.0;
  double log2n = 0.0;
  double bound_harmonic = 0.0;  // m_max * H_n
  double bound_log = 0.0;       // m_max * log2 n; the reported xi
  bool pr_holds = false;        // ratio <= pr_sum, observed
  bool thelog_holds = false;    // ratio <= bound_log, observed
  bool chain_applicable = false;

  bool operator==(const BoundReport&) const = default;
};

/// Everything a trace says about its own bound. pr_holds and thelog_holds are
/// recorded observations. DataError when trace and oracle sizes differ.
BoundReport build_report(const Trace& trace, const OracleResult& oracle);

/// Fixed column order: instance, heuristic, n, opt, final, ratio, pr_sum,
/// pr_holds, avarc_all, m_max, harmonic, log2n, bound_log, thelog_holds,
/// chain_applicable.
std::string report_csv_header();
std::string report_csv_row(const BoundReport& report);

/// Shortest round-trip decimal form used in every text output.
std::string format_double(double value);

}  // namespace tspbound
