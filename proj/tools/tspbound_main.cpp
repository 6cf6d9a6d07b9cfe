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

// tspbound: generate instances, build instrumented tours, and report how
// their construction accounting compares with the exact optimum.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 size limit.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tspbound/bound_analysis.hpp"
#include "tspbound/error.hpp"
#include "tspbound/exact_oracle.hpp"
#include "tspbound/generators.hpp"
#include "tspbound/heuristics.hpp"
#include "tspbound/sweep.hpp"
#include "tspbound/trace.hpp"
#include "tspbound/tsplib_io.hpp"

namespace {

using namespace tspbound;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitLimit = 3;

const std::vector<std::string> kHeuristicNames{"nn", "cheapest-insertion", "greedy"};
const std::vector<std::string> kKindNames{"euclidean", "metric"};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(out_path, text);
  }
}

void require_valid(const Trace& trace, const Instance& inst) {
  const auto violations = validate_trace(trace, inst);
  if (violations.empty()) return;
  std::string msg = fmt::format("trace fails validation ({} violations)", violations.size());
  for (const auto& v : violations) msg += "\n  " + to_string(v);
  throw DataError(msg);
}

struct GenOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string kind = "euclidean";
  std::string out;
};

int run_gen(const GenOptions& o) {
  const Instance inst = generate_instance(*parse_instance_kind(o.kind), o.n, o.seed);
  write_file(o.out, emit_tsplib(inst));
  fmt::print("{} n={}\n", inst.name(), inst.n());
  return 0;
}

struct SolveOptions {
  std::string heuristic;
  std::string instance;
  Vertex start = 0;
  bool all_starts = false;
  std::string trace_out;
};

int run_solve(const SolveOptions& o) {
  const Instance inst = read_tsplib(o.instance);
  const Heuristic h = *parse_heuristic(o.heuristic);
  if (o.start >= inst.n()) {
    std::cerr << fmt::format("--start {} out of range for n = {}\n", o.start, inst.n());
    return kExitUsage;
  }
  const Trace trace = h == Heuristic::nearest_neighbor && o.all_starts
                          ? nearest_neighbor_all_starts(inst)
                          : construct(inst, h, o.start);
  require_valid(trace, inst);
  emit(o.trace_out, trace_to_json(trace));
  if (!o.trace_out.empty() && o.trace_out != "-") {
    fmt::print("{} {} n={} final_weight={}\n", trace.heuristic, trace.instance_name, trace.n,
               trace.final_weight);
  }
  return 0;
}

struct ReportOptions {
  std::string trace;
  std::string instance;
  std::string format = "json";
  std::string out;
};

int run_report(const ReportOptions& o) {
  const Instance inst = read_tsplib(o.instance);
  const Trace trace = trace_from_json(read_file(o.trace));
  require_valid(trace, inst);
  const BoundReport report = build_report(trace, optimum(inst));
  if (o.format == "csv") {
    emit(o.out, report_csv_header() + "\n" + report_csv_row(report) + "\n");
  } else {
    emit(o.out, report_to_json(report));
  }
  return 0;
}

struct SweepOptions {
  SweepConfig config;
  std::string heuristic = "nn";
  std::string kind = "euclidean";
  std::string csv_out;
};

int run_sweep_command(SweepOptions o) {
  o.config.heuristic = *parse_heuristic(o.heuristic);
  o.config.kind = *parse_instance_kind(o.kind);
  try {
    check_sweep_config(o.config);
  } catch (const DataError& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  const SweepResult result = run_sweep(o.config);
  write_file(o.csv_out, sweep_csv(result));
  fmt::print("{}\n", summary_line(result.summary));
  return 0;
}

int run_check_harmonic(std::size_t n_max) {
  const auto rows = harmonic_vs_log(n_max);
  fmt::memory_buffer out;
  fmt::format_to(std::back_inserter(out), "n,harmonic,log2n,holds\n");
  std::vector<std::size_t> failures;
  for (const HarmonicRow& row : rows) {
    fmt::format_to(std::back_inserter(out), "{},{:.15g},{:.15g},{}\n", row.n, row.harmonic,
                   row.log2n, row.holds ? "holds" : "FAILS");
    if (!row.holds) failures.push_back(row.n);
  }
  fmt::format_to(std::back_inserter(out), "failures={} at n in {{{}}}\n", failures.size(),
                 fmt::join(failures, ","));
  std::fwrite(out.data(), 1, out.size(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive TSP accounting workbench"};
  app.require_subcommand(1);
  int status = 0;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random instance in TSPLIB form");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::Range(3, 1 << 20));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--kind", gen.kind, "euclidean or metric")->check(CLI::IsMember(kKindNames));
  gen_cmd->add_option("--out", gen.out, "Output .tsp path")->required();
  gen_cmd->callback([&] { status = run_gen(gen); });

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Construct a tour and write its trace");
  solve_cmd->add_option("--heuristic", solve.heuristic)->required()->check(CLI::IsMember(kHeuristicNames));
  solve_cmd->add_option("--instance", solve.instance, "TSPLIB file")->required();
  solve_cmd->add_option("--start", solve.start, "Nearest-neighbour start vertex");
  solve_cmd->add_flag("--all-starts", solve.all_starts, "Nearest neighbour: keep the best start");
  solve_cmd->add_option("--trace-out", solve.trace_out, "Trace JSON path (stdout if omitted)");
  solve_cmd->callback([&] { status = run_solve(solve); });

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Bound report for a trace against the exact optimum");
  report_cmd->add_option("--trace", report.trace, "Trace JSON")->required();
  report_cmd->add_option("--instance", report.instance, "TSPLIB file")->required();
  report_cmd->add_option("--format", report.format)->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--out", report.out, "Output path (stdout if omitted)");
  report_cmd->callback([&] { status = run_report(report); });

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Generate, solve and report over a size range");
  sweep_cmd->add_option("--n-min", sweep.config.n_min)->required();
  sweep_cmd->add_option("--n-max", sweep.config.n_max)->required();
  sweep_cmd->add_option("--count", sweep.config.count, "Instances per size")->required();
  sweep_cmd->add_option("--seed", sweep.config.seed);
  sweep_cmd->add_option("--heuristic", sweep.heuristic)->check(CLI::IsMember(kHeuristicNames));
  sweep_cmd->add_option("--kind", sweep.kind)->check(CLI::IsMember(kKindNames));
  sweep_cmd->add_option("--csv-out", sweep.csv_out)->required();
  sweep_cmd->add_flag("--allow-small", sweep.config.allow_small, "Permit n-min below 5");
  sweep_cmd->callback([&] { status = run_sweep_command(sweep); });

  std::size_t harmonic_n_max = 0;
  auto* harmonic_cmd = app.add_subcommand("check-harmonic", "Tabulate H_n against log2 n");
  harmonic_cmd->add_option("--n-max", harmonic_n_max)->required()->check(CLI::PositiveNumber);
  harmonic_cmd->callback([&] { status = run_check_harmonic(harmonic_n_max); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return status;
}
