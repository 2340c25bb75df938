// Copyright 2026 The SMP Authors.
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

#include "smp/weighted.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace smp {

void WeightedBipartiteGraph::set_weight(Index row, Index col, int w) {
  if (w < 0 || w > 2) throw std::invalid_argument("weights must lie in {0,1,2}");
  weights_.at(row * n_ + col) = w;
}

WeightedBipartiteGraph build_weighted(const SmpInstance& instance) {
  const std::size_t ng = instance.girl_count();
  const std::size_t nb = instance.boy_count();
  WeightedBipartiteGraph w(std::max(ng, nb));
  for (Index g = 0; g < ng; ++g) {
    for (Index b : instance.girl_list(g)) {
      if (instance.boy_accepts(b, g)) {
        w.set_weight(g, b, 2);
      } else if (!instance.boy_listed(b)) {
        w.set_weight(g, b, 1);
      }
    }
  }
  for (Index b = 0; b < nb; ++b) {
    for (Index g : instance.boy_list(b)) {
      if (!instance.girl_listed(g)) w.set_weight(g, b, 1);
    }
  }
  return w;
}

// Minimises the negated weights; rows and columns are 1-based internally.
WeightedMatching hungarian_max_weight(const WeightedBipartiteGraph& graph) {
  const std::size_t n = graph.size();
  WeightedMatching out;
  out.column_of_row.assign(n, 0);
  if (n == 0) return out;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
    return -static_cast<std::int64_t>(graph.weight(i - 1, j - 1));
  };
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= n; ++j) out.column_of_row[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) out.total_weight += graph.weight(i, out.column_of_row[i]);
  return out;
}

WeightCheck weight_check(const SmpInstance& instance) {
  const auto listed = listed_sets(instance);
  WeightCheck check;
  check.threshold = static_cast<std::int64_t>(listed.girls.size() + listed.boys.size());
  const auto graph = build_weighted(instance);
  const auto best = hungarian_max_weight(graph);
  check.total_weight = best.total_weight;
  if (check.total_weight > check.threshold) {
    throw std::logic_error("weighted matching exceeds |G_L| + |B_L|");
  }
  check.solvable = check.total_weight == check.threshold;
  if (check.solvable) {
    Assignment a;
    for (Index g = 0; g < instance.girl_count(); ++g) {
      const Index b = best.column_of_row[g];
      if (b < instance.boy_count() && graph.weight(g, b) > 0) a.pairs.push_back({g, b});
    }
    check.assignment = std::move(a);
  }
  return check;
}

bool solvable_via_weight(const SmpInstance& instance) { return weight_check(instance).solvable; }

}  // namespace smp
