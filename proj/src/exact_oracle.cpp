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

#include "tspbound/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "tspbound/error.hpp"

namespace tspbound {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 2;

void check_size(const Instance& inst, std::size_t max_n, const char* method) {
  if (inst.n() < 3 || inst.n() > max_n) {
    throw LimitError(fmt::format("{} supports 3 <= n <= {}, got n = {}", method,
                                 max_n, inst.n()));
  }
}

// Table of shortest paths from vertex 0. Vertex v >= 1 maps to bit v-1; entry
// [mask * (n-1) + (v-1)] is the lightest path leaving 0, visiting exactly the
// vertices of mask and ending at v (v in mask).
class PathTable {
 public:
  explicit PathTable(const Instance& inst)
      : inst_(inst),
        k_(inst.n() - 1),
        cost_((std::size_t{1} << k_) * k_, kInf) {
    for (std::size_t v = 0; v < k_; ++v) {
      at(std::uint32_t{1} << v, v) = inst.weight(0, static_cast<Vertex>(v + 1));
    }
  }

  std::size_t width() const { return k_; }
  Weight& at(std::uint32_t mask, std::size_t v) { return cost_[mask * k_ + v]; }
  Weight at(std::uint32_t mask, std::size_t v) const { return cost_[mask * k_ + v]; }

  void relax(std::uint32_t mask) {
    for (std::size_t end = 0; end < k_; ++end) {
      const std::uint32_t bit = std::uint32_t{1} << end;
      if ((mask & bit) == 0) continue;
      const std::uint32_t prev = mask ^ bit;
      Weight best = kInf;
      for (std::size_t via = 0; via < k_; ++via) {
        if ((prev & (std::uint32_t{1} << via)) == 0) continue;
        const Weight c = at(prev, via) + inst_.weight(static_cast<Vertex>(via + 1),
                                                      static_cast<Vertex>(end + 1));
        best = std::min(best, c);
      }
      at(mask, end) = best;
    }
  }

  // Walks forward from 0 taking the smallest next vertex that still admits an
  // optimal completion; a path to 0 through R reversed is a path from 0
  // through R, so the table answers completion costs directly.
  OracleResult reconstruct() const {
    const std::uint32_t full = (std::uint32_t{1} << k_) - 1;
    Weight value = kInf;
    for (std::size_t v = 0; v < k_; ++v) {
      value = std::min(value, at(full, v) + inst_.weight(static_cast<Vertex>(v + 1), 0));
    }
    OracleResult result;
    result.value = value;
    result.method = OracleMethod::held_karp;
    result.tour.push_back(0);
    std::uint32_t remaining = full;
    Vertex current = 0;
    Weight spent = 0;
    while (remaining != 0) {
      for (std::size_t v = 0; v < k_; ++v) {
        if ((remaining & (std::uint32_t{1} << v)) == 0) continue;
        const auto next = static_cast<Vertex>(v + 1);
        const Weight step = inst_.weight(current, next);
        if (spent + step + at(remaining, v) == value) {
          spent += step;
          current = next;
          remaining ^= std::uint32_t{1} << v;
          result.tour.push_back(next);
          break;
        }
      }
    }
    return result;
  }

 private:
  const Instance& inst_;
  std::size_t k_;
  std::vector<Weight> cost_;
};

}  // namespace

std::string_view to_string(OracleMethod method) {
  return method == OracleMethod::brute ? "brute" : "held-karp";
}

OracleResult brute_force_opt(const Instance& inst) {
  check_size(inst, kBruteForceMaxN, "brute force");
  const std::size_t n = inst.n();
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), Vertex{1});

  OracleResult best;
  best.method = OracleMethod::brute;
  best.value = kInf;
  // Permutations arrive in lexicographic order, so the first strict minimum
  // is the lexicographically least minimiser. Each cycle appears twice;
  // keep the orientation with perm.front() < perm.back().
  do {
    if (perm.front() > perm.back()) continue;
    Weight w = inst.weight(0, perm.front()) + inst.weight(perm.back(), 0);
    for (std::size_t k = 0; k + 1 < perm.size(); ++k) {
      w += inst.weight(perm[k], perm[k + 1]);
    }
    if (w < best.value) {
      best.value = w;
      best.tour.assign(1, 0);
      best.tour.insert(best.tour.end(), perm.begin(), perm.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

OracleResult held_karp_opt_serial(const Instance& inst) {
  check_size(inst, kHeldKarpMaxN, "held-karp");
  PathTable table(inst);
  const std::uint32_t limit = std::uint32_t{1} << table.width();
  // Every proper subset of a mask is numerically smaller.
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (std::has_single_bit(mask)) continue;
    table.relax(mask);
  }
  return table.reconstruct();
}

OracleResult held_karp_opt(const Instance& inst) {
  check_size(inst, kHeldKarpMaxN, "held-karp");
  PathTable table(inst);
  const std::size_t k = table.width();
  const std::uint32_t limit = std::uint32_t{1} << k;

  std::vector<std::vector<std::uint32_t>> layers(k + 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    layers[std::popcount(mask)].push_back(mask);
  }
  // Masks in one layer only read the previous layer.
  for (std::size_t size = 2; size <= k; ++size) {
    const auto& layer = layers[size];
    const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static) if (count > 256)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      table.relax(layer[static_cast<std::size_t>(idx)]);
    }
  }
  return table.reconstruct();
}

OracleResult optimum(const Instance& inst, OptimumOptions options) {
  if (inst.n() > kHeldKarpMaxN) {
    throw LimitError(fmt::format(
        "exact optimum unsupported for n = {} (limit {})", inst.n(), kHeldKarpMaxN));
  }
  OracleResult hk = held_karp_opt(inst);
  if (options.cross_check && inst.n() <= kBruteForceMaxN) {
    const OracleResult bf = brute_force_opt(inst);
    if (bf.value != hk.value) {
      throw std::logic_error(fmt::format(
          "oracle disagreement on '{}': brute {} vs held-karp {}", inst.name(),
          bf.value, hk.value));
    }
  }
  return hk;
}

}  // namespace tspbound
