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

#include "tspbound/bound_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double harmonic(std::size_t n) {
  if (n == 0) throw DataError("harmonic number needs n >= 1");
  CompensatedSum sum;
  for (std::size_t i = n; i >= 1; --i) sum.add(1.0 / static_cast<double>(i));
  return sum.value();
}

std::vector<HarmonicRow> harmonic_vs_log(std::size_t n_max) {
  if (n_max == 0) throw DataError("n_max must be >= 1");
  std::vector<HarmonicRow> rows;
  rows.reserve(n_max);
  CompensatedSum sum;
  for (std::size_t n = 1; n <= n_max; ++n) {
    sum.add(1.0 / static_cast<double>(n));
    HarmonicRow row;
    row.n = n;
    row.harmonic = sum.value();
    row.log2n = std::log2(static_cast<double>(n));
    row.holds = row.harmonic <= row.log2n;
    rows.push_back(row);
  }
  return rows;
}

PrSum pr_sum(const Trace& trace) {
  PrSum out;
  CompensatedSum all;
  CompensatedSum from_i2;
  for (const ConstructionStep& s : trace.steps) {
    if (s.w_before <= 0) {
      ++out.excluded;
      continue;
    }
    const double term = static_cast<double>(s.delta_a) / static_cast<double>(s.w_before);
    all.add(term);
    if (s.i >= 2) from_i2.add(term);
  }
  out.value = all.value();
  out.value_from_i2 = from_i2.value();
  return out;
}

BoundReport build_report(const Trace& trace, const OracleResult& oracle) {
  if (oracle.tour.size() != trace.n) {
    throw DataError(fmt::format("trace has n = {} but the oracle tour has {} vertices",
                                trace.n, oracle.tour.size()));
  }
  BoundReport r;
  r.instance = trace.instance_name;
  r.heuristic = trace.heuristic;
  r.n = trace.n;
  r.opt = oracle.value;
  r.final = trace.final_weight;
  if (r.opt > 0) {
    r.ratio = static_cast<double>(r.final) / static_cast<double>(r.opt);
  } else {
    r.ratio = r.final == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  }

  const PrSum pr = pr_sum(trace);
  r.pr_sum = pr.value;
  r.pr_excluded = pr.excluded;
  r.pr_sum_from_i2 = pr.value_from_i2;

  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const ConstructionStep& s = trace.steps[k];
    r.step_m.push_back(s.m);
    r.m_max = std::max(r.m_max, s.m);
    if (check_avarc(s) == AvArcVerdict::violated) r.avarc_violations.push_back(k);
  }
  r.avarc_all = r.avarc_violations.empty();

  r.harmonic = harmonic(r.n);
  r.log2n = std::log2(static_cast<double>(r.n));
  r.bound_harmonic = static_cast<double>(r.m_max) * r.harmonic;
  r.bound_log = static_cast<double>(r.m_max) * r.log2n;
  r.pr_holds = r.ratio <= r.pr_sum;
  r.thelog_holds = r.ratio <= r.bound_log;
  r.chain_applicable = r.avarc_all && r.n >= 5;
  return r;
}

std::string format_double(double value) { return fmt::format("{}", value); }

std::string report_csv_header() {
  return "instance,heuristic,n,opt,final,ratio,pr_sum,pr_holds,avarc_all,m_max,"
         "harmonic,log2n,bound_log,thelog_holds,chain_applicable";
}

std::string report_csv_row(const BoundReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", r.instance,
                     r.heuristic, r.n, r.opt, r.final, format_double(r.ratio),
                     format_double(r.pr_sum), r.pr_holds, r.avarc_all, r.m_max,
                     format_double(r.harmonic), format_double(r.log2n),
                     format_double(r.bound_log), r.thelog_holds, r.chain_applicable);
}

}  // namespace tspbound
