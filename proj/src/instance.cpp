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

#include "tspbound/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

namespace {

// Keeps n * beta (the heaviest conceivable tour) and the DP sums built on it
// well inside int64.
void check_weight_range(std::size_t n, Weight max_finite) {
  const auto nn = static_cast<Weight>(n);
  const Weight limit = std::numeric_limits<Weight>::max() / 4 / (nn * (nn + 1));
  if (max_finite > limit) {
    throw DataError(fmt::format("weight {} too large for n = {} (limit {})",
                                max_finite, n, limit));
  }
}

template <typename Matrix>
void check_shape(std::size_t n, const Matrix& weights) {
  if (n < 3) {
    throw DataError(fmt::format("instance needs at least 3 vertices, got {}", n));
  }
  if (weights.size() != n) {
    throw DataError(fmt::format("dimension mismatch: expected {} rows, got {}",
                                n, weights.size()));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (weights[r].size() != n) {
      throw DataError(fmt::format(
          "dimension mismatch: row {} has {} entries, expected {}", r,
          weights[r].size(), n));
    }
  }
}

}  // namespace

Arc make_arc(Vertex a, Vertex b) {
  if (a == b) throw DataError(fmt::format("self-loop arc ({}, {})", a, b));
  return a < b ? Arc{a, b} : Arc{b, a};
}

Weight euc2d_weight(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return static_cast<Weight>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

Weight Instance::euclidean_weight(Vertex a, Vertex b) const {
  return euc2d_weight(points_[a], points_[b]);
}

Weight Instance::arc_weight(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) {
    throw std::out_of_range(
        fmt::format("arc ({}, {}) out of range for n = {}", a, b, n_));
  }
  if (a == b) throw DataError(fmt::format("self-loop arc ({}, {})", a, b));
  return weight(a, b);
}

bool Instance::operator==(const Instance& other) const {
  if (n_ != other.n_ || name_ != other.name_ || beta_ != other.beta_) {
    return false;
  }
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      if (weight(a, b) != other.weight(a, b)) return false;
    }
  }
  return true;
}

void Instance::finish(bool scan_parallel) {
  Weight max_finite = 0;
  if (points_.empty()) {
    for (std::size_t k = 0; k < packed_.size(); ++k) {
      if (absent_count_ == 0 || absent_[k] == 0) {
        max_finite = std::max(max_finite, packed_[k]);
      }
    }
  } else {
    const auto count = static_cast<std::int64_t>(n_);
#pragma omp parallel for reduction(max : max_finite) schedule(dynamic, 64) if (scan_parallel)
    for (std::int64_t a = 0; a < count; ++a) {
      for (auto b = static_cast<Vertex>(a + 1); b < n_; ++b) {
        max_finite = std::max(max_finite,
                              euclidean_weight(static_cast<Vertex>(a), b));
      }
    }
  }
  check_weight_range(n_, max_finite);
  max_finite_ = max_finite;
  beta_ = static_cast<Weight>(n_) * max_finite + 1;
  if (absent_count_ > 0) {
    for (std::size_t k = 0; k < packed_.size(); ++k) {
      if (absent_[k] != 0) packed_[k] = beta_;
    }
  } else {
    absent_.clear();
  }
}

Instance make_instance(std::size_t n, const WeightMatrix& weights,
                       std::string name) {
  PartialWeightMatrix partial(weights.size());
  for (std::size_t r = 0; r < weights.size(); ++r) {
    partial[r].assign(weights[r].begin(), weights[r].end());
  }
  return make_instance(n, partial, std::move(name));
}

Instance make_instance(std::size_t n, const PartialWeightMatrix& weights,
                       std::string name) {
  check_shape(n, weights);
  Instance inst;
  inst.n_ = n;
  inst.name_ = std::move(name);
  inst.packed_.assign(n * (n - 1) / 2, 0);
  inst.absent_.assign(inst.packed_.size(), 0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const auto& upper = weights[a][b];
      const auto& lower = weights[b][a];
      if (upper.has_value() != lower.has_value() ||
          (upper && *upper != *lower)) {
        throw DataError(fmt::format("asymmetric weights at ({}, {})", a, b));
      }
      const std::size_t k = inst.packed_index(a, b);
      if (!upper) {
        inst.absent_[k] = 1;
        ++inst.absent_count_;
        continue;
      }
      if (*upper < 0) {
        throw DataError(
            fmt::format("negative weight {} at ({}, {})", *upper, a, b));
      }
      inst.packed_[k] = *upper;
    }
  }
  inst.finish(false);
  return inst;
}

Instance euclidean_from_points(std::vector<Point> points, std::string name) {
  if (points.size() < 3) {
    throw DataError(fmt::format("instance needs at least 3 points, got {}",
                                points.size()));
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DataError("non-finite coordinate");
    }
  }
  Instance inst;
  inst.n_ = points.size();
  inst.name_ = std::move(name);
  inst.points_ = std::move(points);
  inst.finish(inst.n_ >= 512);
  return inst;
}

bool is_metric(const Instance& inst) {
  if (inst.has_absent_arcs()) return false;
  const auto n = static_cast<Vertex>(inst.n());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      const Weight direct = inst.weight(u, w);
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (direct > inst.weight(u, v) + inst.weight(v, w)) return false;
      }
    }
  }
  return true;
}

WeightMatrix to_matrix(const Instance& inst) {
  const auto n = static_cast<Vertex>(inst.n());
  WeightMatrix m(n, std::vector<Weight>(n, 0));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      m[a][b] = m[b][a] = inst.weight(a, b);
    }
  }
  return m;
}

}  // namespace tspbound
