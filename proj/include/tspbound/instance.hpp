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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tspbound {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Undirected arc, stored with u < v.
struct Arc {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Canonical arc between two distinct vertices. Throws DataError on a
/// self-loop.
Arc make_arc(Vertex a, Vertex b);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using WeightMatrix = std::vector<std::vector<Weight>>;
using PartialWeightMatrix = std::vector<std::vector<std::optional<Weight>>>;

// Complete symmetric instance. Absent arcs carry the sentinel weight beta,
// which is n * (max finite weight) + 1 so any tour through an absent arc is
// heavier than every tour that avoids them.
//
// Two storage forms share one interface: an explicit packed upper triangle,
// or planar points whose weights are rounded Euclidean distances computed on
// demand (large instances never materialise the matrix).
class Instance {
 public:
  std::size_t n() const { return n_; }
  const std::string& name() const { return name_; }
  Weight beta() const { return beta_; }
  Weight max_finite_weight() const { return max_finite_; }
  bool has_absent_arcs() const { return absent_count_ > 0; }
  bool is_euclidean() const { return !points_.empty(); }
  const std::vector<Point>& points() const { return points_; }

  // Unchecked lookup for distinct in-range vertices. Absent arcs read beta.
  Weight weight(Vertex a, Vertex b) const {
    if (!points_.empty()) return euclidean_weight(a, b);
    return packed_[packed_index(a, b)];
  }

  bool is_absent(Vertex a, Vertex b) const {
    return absent_count_ > 0 && absent_[packed_index(a, b)] != 0;
  }

  /// Checked lookup; std::out_of_range for bad indices, DataError for u == v.
  Weight arc_weight(Vertex a, Vertex b) const;
  Weight arc_weight(Arc arc) const { return arc_weight(arc.u, arc.v); }

  /// Value equality: n, name, beta and every arc weight.
  bool operator==(const Instance& other) const;

 private:
  friend Instance make_instance(std::size_t, const WeightMatrix&, std::string);
  friend Instance make_instance(std::size_t, const PartialWeightMatrix&,
                                std::string);
  friend Instance euclidean_from_points(std::vector<Point>, std::string);

  Instance() = default;

  std::size_t packed_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    // Row a of the strict upper triangle starts after a rows of shrinking length.
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }
  Weight euclidean_weight(Vertex a, Vertex b) const;
  void finish(bool scan_parallel);

  std::size_t n_ = 0;
  std::string name_;
  std::vector<Weight> packed_;
  std::vector<std::uint8_t> absent_;
  std::size_t absent_count_ = 0;
  std::vector<Point> points_;
  Weight max_finite_ = 0;
  Weight beta_ = 1;
};

/// Builds an instance from a dense n x n symmetric matrix (diagonal ignored).
Instance make_instance(std::size_t n, const WeightMatrix& weights,
                       std::string name);

/// As above, with std::nullopt marking an absent arc.
Instance make_instance(std::size_t n, const PartialWeightMatrix& weights,
                       std::string name);

/// TSPLIB EUC_2D: weight = nint(euclidean distance).
Instance euclidean_from_points(std::vector<Point> points, std::string name = "");

/// TSPLIB nint rounding of a Euclidean distance.
Weight euc2d_weight(const Point& a, const Point& b);

/// True iff the triangle inequality holds over all distinct triples and no
/// arc is absent.
bool is_metric(const Instance& inst);

/// Dense copy of the effective weights (diagonal zero).
WeightMatrix to_matrix(const Instance& inst);

}  // namespace tspbound
