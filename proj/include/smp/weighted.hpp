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

#ifndef SMP_WEIGHTED_HPP_
#define SMP_WEIGHTED_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

// Square {0,1,2} weight matrix; row i < |G| is girl i, column j < |B| is
// boy j, the rest is zero padding.
class WeightedBipartiteGraph {
 public:
  explicit WeightedBipartiteGraph(std::size_t n) : n_(n), weights_(n * n, 0) {}

  std::size_t size() const { return n_; }
  int weight(Index row, Index col) const { return weights_.at(row * n_ + col); }
  void set_weight(Index row, Index col, int w);

 private:
  std::size_t n_;
  std::vector<int> weights_;
};

// weight 2: list compatible; weight 1: exactly one side listed and the pair
// is on that side's list; 0 otherwise.
WeightedBipartiteGraph build_weighted(const SmpInstance& instance);

struct WeightedMatching {
  std::int64_t total_weight = 0;
  std::vector<Index> column_of_row;  // perfect matching on the padded matrix
};

// Maximum-weight perfect matching, O(n^3) Hungarian method with potentials.
WeightedMatching hungarian_max_weight(const WeightedBipartiteGraph& graph);

struct WeightCheck {
  bool solvable = false;
  std::int64_t total_weight = 0;
  std::int64_t threshold = 0;       // |G_L| + |B_L|
  std::optional<Assignment> assignment;  // positive-weight real pairs, when solvable
};

// Throws std::logic_error if the optimum ever exceeds |G_L| + |B_L|.
WeightCheck weight_check(const SmpInstance& instance);

bool solvable_via_weight(const SmpInstance& instance);

}  // namespace smp

#endif  // SMP_WEIGHTED_HPP_
