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

#include "tspbound/heuristics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::nearest_neighbor:
      return "nn";
    case Heuristic::cheapest_insertion:
      return "cheapest-insertion";
    case Heuristic::greedy_edge:
      return "greedy";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::nearest_neighbor, Heuristic::cheapest_insertion,
                      Heuristic::greedy_edge}) {
    if (to_string(h) == name) return h;
  }
  return std::nullopt;
}

Trace nearest_neighbor(const Instance& inst, Vertex start) {
  const std::size_t n = inst.n();
  if (start >= n) {
    throw DataError(fmt::format("start vertex {} out of range for n = {}", start, n));
  }
  PartialSolution sol(n);
  std::vector<ConstructionStep> steps;
  steps.reserve(n);

  std::vector<Vertex> unvisited;
  unvisited.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != start) unvisited.push_back(v);
  }

  Vertex current = start;
  while (!unvisited.empty()) {
    std::size_t best = 0;
    Weight best_w = inst.weight(current, unvisited[0]);
    for (std::size_t k = 1; k < unvisited.size(); ++k) {
      const Weight w = inst.weight(current, unvisited[k]);
      if (w < best_w || (w == best_w && unvisited[k] < unvisited[best])) {
        best = k;
        best_w = w;
      }
    }
    const Vertex next = unvisited[best];
    unvisited[best] = unvisited.back();
    unvisited.pop_back();
    const std::array<Arc, 1> arc{make_arc(current, next)};
    steps.push_back(sol.apply(inst, arc));
    current = next;
  }
  const std::array<Arc, 1> closing{make_arc(current, start)};
  steps.push_back(sol.apply(inst, closing));
  return make_trace(inst, std::string(to_string(Heuristic::nearest_neighbor)),
                    sol, std::move(steps));
}

Trace nearest_neighbor_all_starts(const Instance& inst) {
  Trace best = nearest_neighbor(inst, 0);
  for (Vertex s = 1; s < inst.n(); ++s) {
    Trace candidate = nearest_neighbor(inst, s);
    if (candidate.final_weight < best.final_weight) best = std::move(candidate);
  }
  return best;
}

namespace {

struct Insertion {
  Weight delta = std::numeric_limits<Weight>::max();
  Arc edge{};

  bool better_than(const Insertion& other) const {
    return std::tie(delta, edge) < std::tie(other.delta, other.edge);
  }
};

Weight insertion_cost(const Instance& inst, Vertex k, Arc edge) {
  return inst.weight(edge.u, k) + inst.weight(k, edge.v) -
         inst.weight(edge.u, edge.v);
}

}  // namespace

Trace cheapest_insertion(const Instance& inst) {
  const std::size_t n = inst.n();
  PartialSolution sol(n);
  std::vector<ConstructionStep> steps;
  steps.reserve(n);

  Arc seed{0, 1};
  Weight seed_w = inst.weight(0, 1);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (inst.weight(a, b) < seed_w) {
        seed = {a, b};
        seed_w = inst.weight(a, b);
      }
    }
  }
  Vertex third = 0;
  Weight third_w = std::numeric_limits<Weight>::max();
  for (Vertex c = 0; c < n; ++c) {
    if (c == seed.u || c == seed.v) continue;
    const Weight w = inst.weight(seed.u, c) + inst.weight(seed.v, c);
    if (w < third_w) {
      third = c;
      third_w = w;
    }
  }

  std::array<Arc, 3> seed_arcs{seed, make_arc(seed.u, third), make_arc(seed.v, third)};
  std::sort(seed_arcs.begin() + 1, seed_arcs.end());
  for (const Arc& arc : seed_arcs) {
    steps.push_back(sol.apply(inst, std::span<const Arc>(&arc, 1)));
  }

  // Cyclic successor of each tour vertex; kNone marks vertices not yet inserted.
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> next(n, kNone);
  next[seed.u] = seed.v;
  next[seed.v] = third;
  next[third] = seed.u;

  std::vector<Insertion> best(n);
  auto refresh = [&](Vertex k) {
    Insertion b;
    for (Vertex u = 0; u < n; ++u) {
      if (next[u] == kNone) continue;
      const Arc edge = make_arc(u, next[u]);
      const Insertion cand{insertion_cost(inst, k, edge), edge};
      if (cand.better_than(b)) b = cand;
    }
    best[k] = b;
  };
  for (Vertex k = 0; k < n; ++k) {
    if (next[k] == kNone) refresh(k);
  }

  for (std::size_t inserted = 3; inserted < n; ++inserted) {
    Vertex pick = kNone;
    for (Vertex k = 0; k < n; ++k) {
      if (next[k] != kNone) continue;
      if (pick == kNone || best[k].delta < best[pick].delta) pick = k;
    }
    const Arc removed = best[pick].edge;
    const std::array<Arc, 2> added{make_arc(removed.u, pick), make_arc(pick, removed.v)};
    const std::array<Arc, 1> old{removed};
    steps.push_back(sol.apply(inst, added, old));

    // Splice pick into whichever orientation the tour stores the edge in.
    const Vertex from = next[removed.u] == removed.v ? removed.u : removed.v;
    next[pick] = next[from];
    next[from] = pick;

    for (Vertex k = 0; k < n; ++k) {
      if (next[k] != kNone) continue;
      if (best[k].edge == removed) {
        refresh(k);
        continue;
      }
      for (const Arc& edge : added) {
        const Insertion cand{insertion_cost(inst, k, edge), edge};
        if (cand.better_than(best[k])) best[k] = cand;
      }
    }
  }
  return make_trace(inst, std::string(to_string(Heuristic::cheapest_insertion)),
                    sol, std::move(steps));
}

Trace greedy_edge(const Instance& inst) {
  const std::size_t n = inst.n();
  std::vector<std::tuple<Weight, Arc>> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      candidates.emplace_back(inst.weight(a, b), Arc{a, b});
    }
  }
  std::sort(candidates.begin(), candidates.end());

  PartialSolution sol(n);
  std::vector<ConstructionStep> steps;
  steps.reserve(n);
  DisjointSets fragments(n);
  for (const auto& [w, arc] : candidates) {
    if (sol.size() + 1 == n) break;
    if (sol.degree(arc.u) >= 2 || sol.degree(arc.v) >= 2) continue;
    if (!fragments.unite(arc.u, arc.v)) continue;
    steps.push_back(sol.apply(inst, std::span<const Arc>(&arc, 1)));
  }

  // One Hamiltonian path remains; join its two endpoints.
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < n; ++v) {
    if (sol.degree(v) < 2) ends.push_back(v);
  }
  const std::array<Arc, 1> closing{make_arc(ends.at(0), ends.at(1))};
  steps.push_back(sol.apply(inst, closing));
  return make_trace(inst, std::string(to_string(Heuristic::greedy_edge)), sol,
                    std::move(steps));
}

Trace construct(const Instance& inst, Heuristic h, Vertex start) {
  switch (h) {
    case Heuristic::nearest_neighbor:
      return nearest_neighbor(inst, start);
    case Heuristic::cheapest_insertion:
      return cheapest_insertion(inst);
    case Heuristic::greedy_edge:
      return greedy_edge(inst);
  }
  throw DataError("unknown heuristic");
}

}  // namespace tspbound
