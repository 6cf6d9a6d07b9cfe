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

#include "tspbound/trace.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
  parent_[b] = a;
  rank_size_[a] += rank_size_[b];
  return true;
}

std::optional<double> ConstructionStep::r() const {
  if (w_before <= 0) return std::nullopt;
  return 1.0 + static_cast<double>(delta_a) / static_cast<double>(w_before);
}

std::optional<double> ConstructionStep::rho() const {
  const auto rel = r();
  if (!rel || i == 0) return std::nullopt;
  const auto idx = static_cast<double>(i);
  return idx / (idx + static_cast<double>(m)) * *rel;
}

std::optional<double> step_ratio(const ConstructionStep& step) {
  return step.r();
}

AvArcVerdict check_avarc(const ConstructionStep& step) {
  if (step.w_before <= 0 || step.i == 0) return AvArcVerdict::undefined;
  // delta/w <= m/i  <=>  delta * i <= m * w   (w, i > 0)
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(step.delta_a) * static_cast<Wide>(step.i);
  const Wide rhs = static_cast<Wide>(step.m) * static_cast<Wide>(step.w_before);
  return lhs <= rhs ? AvArcVerdict::satisfied : AvArcVerdict::violated;
}

const char* to_string(AvArcVerdict verdict) {
  switch (verdict) {
    case AvArcVerdict::satisfied:
      return "satisfied";
    case AvArcVerdict::violated:
      return "violated";
    case AvArcVerdict::undefined:
      return "undefined";
  }
  return "?";
}

PartialSolution::PartialSolution(std::size_t n) : degree_(n, 0), components_(n) {}

ConstructionStep PartialSolution::apply(const Instance& inst,
                                        std::span<const Arc> a_new,
                                        std::span<const Arc> a_old) {
  const auto m = static_cast<std::int64_t>(a_new.size()) -
                 static_cast<std::int64_t>(a_old.size());
  if (m < 1) {
    throw DataError(fmt::format("move adds {} and removes {} arcs; m = {} < 1",
                                a_new.size(), a_old.size(), m));
  }
  Weight added = 0;
  Weight removed = 0;
  std::set<Arc> seen;
  for (const Arc& arc : a_old) {
    if (!arcs_.contains(arc) || !seen.insert(arc).second) {
      throw DataError(
          fmt::format("cannot remove arc ({}, {}): not in S", arc.u, arc.v));
    }
    removed += inst.arc_weight(arc);
  }
  seen.clear();
  for (const Arc& arc : a_new) {
    if (arcs_.contains(arc) || !seen.insert(arc).second) {
      throw DataError(
          fmt::format("cannot add arc ({}, {}): already in S", arc.u, arc.v));
    }
    added += inst.arc_weight(arc);
  }

  ConstructionStep step;
  step.i = arcs_.size();
  step.a_new.assign(a_new.begin(), a_new.end());
  step.a_old.assign(a_old.begin(), a_old.end());
  step.m = m;
  step.delta_a = added - removed;
  step.w_before = weight_;
  step.w_after = weight_ + step.delta_a;

  for (const Arc& arc : a_old) {
    arcs_.erase(arc);
    --degree_[arc.u];
    --degree_[arc.v];
    components_stale_ = true;
  }
  for (const Arc& arc : a_new) {
    arcs_.insert(arc);
    ++degree_[arc.u];
    ++degree_[arc.v];
    if (!components_stale_) components_.unite(arc.u, arc.v);
  }
  weight_ = step.w_after;
  return step;
}

bool PartialSolution::connected(Vertex a, Vertex b) {
  if (components_stale_) rebuild_components();
  return components_.find(a) == components_.find(b);
}

void PartialSolution::rebuild_components() {
  components_ = DisjointSets(degree_.size());
  for (const Arc& arc : arcs_) components_.unite(arc.u, arc.v);
  components_stale_ = false;
}

Trace make_trace(const Instance& inst, std::string heuristic,
                 const PartialSolution& sol,
                 std::vector<ConstructionStep> steps) {
  Trace trace;
  trace.instance_name = inst.name();
  trace.heuristic = std::move(heuristic);
  trace.n = inst.n();
  trace.steps = std::move(steps);
  trace.final_arcs.assign(sol.arcs().begin(), sol.arcs().end());
  trace.final_weight = sol.weight();
  if (inst.has_absent_arcs()) {
    trace.beta_used = std::any_of(
        trace.final_arcs.begin(), trace.final_arcs.end(),
        [&](const Arc& a) { return inst.is_absent(a.u, a.v); });
  }
  return trace;
}

std::string to_string(const TraceViolation& v) {
  if (v.step) return fmt::format("step {}: {}: {}", *v.step, v.rule, v.detail);
  return fmt::format("trace: {}: {}", v.rule, v.detail);
}

bool is_hamiltonian_cycle(std::size_t n, std::span<const Arc> arcs) {
  if (n < 3 || arcs.size() != n) return false;
  std::vector<std::uint32_t> degree(n, 0);
  DisjointSets sets(n);
  std::size_t merges = 0;
  for (const Arc& arc : arcs) {
    if (arc.u >= n || arc.v >= n || arc.u == arc.v) return false;
    if (++degree[arc.u] > 2 || ++degree[arc.v] > 2) return false;
    if (sets.unite(arc.u, arc.v)) ++merges;
  }
  // n arcs, all degrees 2 and a single component is exactly one n-cycle.
  return merges == n - 1;
}

std::vector<Vertex> cycle_order(std::size_t n, std::span<const Arc> arcs) {
  if (!is_hamiltonian_cycle(n, arcs)) {
    throw DataError("arc set is not a Hamiltonian cycle");
  }
  std::vector<std::array<Vertex, 2>> adj(n);
  std::vector<std::uint32_t> fill(n, 0);
  for (const Arc& arc : arcs) {
    adj[arc.u][fill[arc.u]++] = arc.v;
    adj[arc.v][fill[arc.v]++] = arc.u;
  }
  std::vector<Vertex> order;
  order.reserve(n);
  Vertex prev = 0;
  Vertex cur = std::min(adj[0][0], adj[0][1]);
  order.push_back(0);
  while (cur != 0) {
    order.push_back(cur);
    const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return order;
}

Weight tour_weight(const Instance& inst, std::span<const Vertex> tour) {
  Weight total = 0;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    total += inst.arc_weight(tour[k], tour[(k + 1) % tour.size()]);
  }
  return total;
}

std::vector<TraceViolation> validate_trace(const Trace& trace,
                                           const Instance& inst) {
  if (trace.n != inst.n()) {
    throw DataError(fmt::format("trace has n = {} but instance has n = {}",
                                trace.n, inst.n()));
  }
  std::vector<TraceViolation> out;
  auto flag = [&](std::optional<std::size_t> step, const char* rule,
                  std::string detail) {
    out.push_back({step, rule, std::move(detail)});
  };
  auto arc_ok = [&](const Arc& a) { return a.u < a.v && a.v < inst.n(); };

  std::set<Arc> current;
  Weight replayed = 0;
  Weight delta_total = 0;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const ConstructionStep& s = trace.steps[k];
    if (s.i != current.size()) {
      flag(k, "step-index", fmt::format("i = {} but |S| = {}", s.i, current.size()));
    }
    const auto net = static_cast<std::int64_t>(s.a_new.size()) -
                     static_cast<std::int64_t>(s.a_old.size());
    if (s.m != net) {
      flag(k, "net-gain", fmt::format("m = {} but |a_new| - |a_old| = {}", s.m, net));
    }
    if (s.m < 1) flag(k, "net-gain", fmt::format("m = {} < 1", s.m));

    const Weight expected_before = k == 0 ? 0 : trace.steps[k - 1].w_after;
    if (s.w_before != expected_before) {
      flag(k, "chaining", fmt::format("w_before = {} but previous w_after = {}",
                                      s.w_before, expected_before));
    }
    if (s.w_before != replayed) {
      flag(k, "replay-weight",
           fmt::format("w_before = {} but gw S = {}", s.w_before, replayed));
    }
    if (s.w_after != s.w_before + s.delta_a) {
      flag(k, "step-weight", fmt::format("w_after = {} != w_before + delta_a = {}",
                                         s.w_after, s.w_before + s.delta_a));
    }

    Weight delta = 0;
    bool arcs_valid = true;
    std::set<Arc> removed;
    for (const Arc& a : s.a_old) {
      if (!arc_ok(a)) {
        flag(k, "arc-range", fmt::format("bad arc ({}, {})", a.u, a.v));
        arcs_valid = false;
        continue;
      }
      if (!current.contains(a) || !removed.insert(a).second) {
        flag(k, "remove-missing", fmt::format("arc ({}, {}) not in S", a.u, a.v));
      }
      delta -= inst.weight(a.u, a.v);
    }
    std::set<Arc> added;
    for (const Arc& a : s.a_new) {
      if (!arc_ok(a)) {
        flag(k, "arc-range", fmt::format("bad arc ({}, {})", a.u, a.v));
        arcs_valid = false;
        continue;
      }
      if (current.contains(a) || !added.insert(a).second) {
        flag(k, "add-duplicate", fmt::format("arc ({}, {}) already in S", a.u, a.v));
      }
      delta += inst.weight(a.u, a.v);
    }
    if (arcs_valid && delta != s.delta_a) {
      flag(k, "delta", fmt::format("delta_a = {} but w(a_new) - w(a_old) = {}",
                                   s.delta_a, delta));
    }
    for (const Arc& a : removed) current.erase(a);
    for (const Arc& a : added) current.insert(a);
    replayed += delta;
    delta_total += s.delta_a;
  }

  const std::vector<Arc> replayed_arcs(current.begin(), current.end());
  std::vector<Arc> final_sorted = trace.final_arcs;
  std::sort(final_sorted.begin(), final_sorted.end());
  if (final_sorted != replayed_arcs) {
    flag(std::nullopt, "final-arcs", "final_arcs differ from the replayed arc set");
  }
  if (trace.final_arcs.size() != trace.n) {
    flag(std::nullopt, "cardinality",
         fmt::format("|final_arcs| = {} != {}", trace.final_arcs.size(), trace.n));
  }
  if (trace.final_weight != delta_total) {
    flag(std::nullopt, "telescoping",
         fmt::format("final_weight = {} but sum of delta_a = {}",
                     trace.final_weight, delta_total));
  }
  if (!trace.steps.empty() && trace.final_weight != trace.steps.back().w_after) {
    flag(std::nullopt, "chaining",
         fmt::format("final_weight = {} but last w_after = {}",
                     trace.final_weight, trace.steps.back().w_after));
  }
  bool final_in_range = true;
  Weight final_gw = 0;
  bool beta_seen = false;
  for (const Arc& a : trace.final_arcs) {
    if (!arc_ok(a)) {
      final_in_range = false;
      continue;
    }
    final_gw += inst.weight(a.u, a.v);
    beta_seen = beta_seen || inst.is_absent(a.u, a.v);
  }
  if (!final_in_range) {
    flag(std::nullopt, "arc-range", "final_arcs contains an invalid arc");
  } else if (final_gw != trace.final_weight) {
    flag(std::nullopt, "final-weight",
         fmt::format("final_weight = {} but gw(final_arcs) = {}",
                     trace.final_weight, final_gw));
  }
  if (final_in_range && beta_seen != trace.beta_used) {
    flag(std::nullopt, "beta-flag", "beta_used does not match the final arcs");
  }
  if (!is_hamiltonian_cycle(trace.n, final_sorted)) {
    flag(std::nullopt, "hamiltonian", "final_arcs do not form a Hamiltonian cycle");
  }
  return out;
}

}  // namespace tspbound
