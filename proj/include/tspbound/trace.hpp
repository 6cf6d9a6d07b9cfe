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
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tspbound/instance.hpp"

namespace tspbound {

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0);

  std::size_t find(std::size_t x);
  /// Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_size_;
};

// One constructive move: A_new arcs enter S, A_old arcs leave it.
struct ConstructionStep {
  std::size_t i = 0;  // |S| before the move
  std::vector<Arc> a_new;
  std::vector<Arc> a_old;
  std::int64_t m = 0;  // |a_new| - |a_old|
  Weight delta_a = 0;  // w(a_new) - w(a_old)
  Weight w_before = 0;
  Weight w_after = 0;

  /// Relative change 1 + delta_a / w_before; empty when w_before == 0.
  std::optional<double> r() const;
  /// Average-arc ratio (i / (i + m)) * r; empty when r is or i == 0.
  std::optional<double> rho() const;
  /// R_i is only defined from i = 2 on; i = 1 steps are kept but flagged.
  bool outside_ratio_domain() const { return i < 2; }

  bool operator==(const ConstructionStep&) const = default;
};

std::optional<double> step_ratio(const ConstructionStep& step);

enum class AvArcVerdict { satisfied, violated, undefined };

/// delta_a / w_before <= m / i, evaluated exactly in integers.
AvArcVerdict check_avarc(const ConstructionStep& step);

const char* to_string(AvArcVerdict verdict);

// Arc set under construction with its cached weight, degrees and components.
class PartialSolution {
 public:
  explicit PartialSolution(std::size_t n);

  /// Applies a move and returns its record. Throws DataError when an arc in
  /// a_old is missing, an arc in a_new is already present (or repeated), or
  /// the net arc gain m is below 1. The solution is unchanged on error.
  ConstructionStep apply(const Instance& inst, std::span<const Arc> a_new,
                         std::span<const Arc> a_old = {});

  std::size_t n() const { return degree_.size(); }
  std::size_t size() const { return arcs_.size(); }
  Weight weight() const { return weight_; }
  const std::set<Arc>& arcs() const { return arcs_; }
  bool contains(Arc arc) const { return arcs_.contains(arc); }
  std::uint32_t degree(Vertex v) const { return degree_[v]; }
  bool connected(Vertex a, Vertex b);

 private:
  void rebuild_components();

  std::set<Arc> arcs_;
  Weight weight_ = 0;
  std::vector<std::uint32_t> degree_;
  DisjointSets components_;
  bool components_stale_ = false;
};

struct Trace {
  std::string instance_name;
  std::string heuristic;
  std::size_t n = 0;
  std::vector<ConstructionStep> steps;
  std::vector<Arc> final_arcs;  // sorted
  Weight final_weight = 0;
  bool beta_used = false;  // some arc of the tour is absent from the instance

  bool operator==(const Trace&) const = default;
};

/// Seals a finished construction into a trace.
Trace make_trace(const Instance& inst, std::string heuristic,
                 const PartialSolution& sol,
                 std::vector<ConstructionStep> steps);

struct TraceViolation {
  std::optional<std::size_t> step;  // empty for whole-trace rules
  std::string rule;
  std::string detail;
};

std::string to_string(const TraceViolation& v);

/// Replays the trace against the instance. Empty iff every step is a legal
/// move with correct bookkeeping, weights chain and telescope, and the final
/// arc set is a Hamiltonian cycle of the instance. Throws DataError when the
/// trace and instance disagree on n.
std::vector<TraceViolation> validate_trace(const Trace& trace,
                                           const Instance& inst);

/// Every vertex has degree 2 and the arcs form one cycle through all n.
bool is_hamiltonian_cycle(std::size_t n, std::span<const Arc> arcs);

/// Vertex order of a Hamiltonian cycle, starting at 0 and walking towards the
/// smaller neighbour of 0.
std::vector<Vertex> cycle_order(std::size_t n, std::span<const Arc> arcs);

Weight tour_weight(const Instance& inst, std::span<const Vertex> tour);

}  // namespace tspbound
