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

#ifndef SMP_BIPARTITE_HPP_
#define SMP_BIPARTITE_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

inline constexpr Index kUnmatched = std::numeric_limits<Index>::max();

// Bipartite graph with adjacency stored left -> right, each row sorted
// ascending. Construction rejects out-of-range targets and duplicate edges.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left_count, std::size_t right_count,
                 std::vector<IndexList> adjacency);

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_count_; }
  std::span<const Index> neighbors(Index left) const { return adjacency_.at(left); }
  bool has_edge(Index left, Index right) const;
  std::size_t edge_count() const;

 private:
  std::size_t left_count_ = 0;
  std::size_t right_count_ = 0;
  std::vector<IndexList> adjacency_;
};

// A matching stored as mate arrays on both sides.
class Matching {
 public:
  Matching() = default;
  Matching(std::size_t left_count, std::size_t right_count)
      : left_mate_(left_count, kUnmatched), right_mate_(right_count, kUnmatched) {}

  std::size_t left_count() const { return left_mate_.size(); }
  std::size_t right_count() const { return right_mate_.size(); }
  Index left_mate(Index left) const { return left_mate_.at(left); }
  Index right_mate(Index right) const { return right_mate_.at(right); }
  bool left_covered(Index left) const { return left_mate_.at(left) != kUnmatched; }
  bool right_covered(Index right) const { return right_mate_.at(right) != kUnmatched; }

  // Both endpoints must be free.
  void match(Index left, Index right);
  // Drops the edge at `left`, if any.
  void unmatch_left(Index left);
  void unmatch_right(Index right);

  std::size_t size() const;
  // Matched edges ordered by left vertex.
  std::vector<std::pair<Index, Index>> pairs() const;
  // Mates are mutually consistent and every pair is an edge of `graph`.
  bool is_valid_for(const BipartiteGraph& graph) const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Index> left_mate_;
  std::vector<Index> right_mate_;
};

// Maximum-cardinality matching by Hopcroft-Karp, O(sqrt(V) E). Vertices and
// neighbors are visited in ascending order, so the result is canonical.
Matching max_matching(const BipartiteGraph& graph);

// Same, restricted to the left vertices flagged in `allowed_left`.
Matching max_matching(const BipartiteGraph& graph, const std::vector<bool>& allowed_left);

IndexList uncovered_left(const BipartiteGraph& graph, const Matching& matching);

// Witness that `subset` cannot be matched: its neighborhood is smaller.
struct DeficiencyCertificate {
  IndexList subset;        // ascending
  IndexList neighborhood;  // ascending
};

// None if some matching covers every vertex of `required`. Otherwise the
// left vertices reachable by alternating paths from the first uncovered
// required vertex, together with their neighborhood.
std::optional<DeficiencyCertificate> deficiency_certificate(
    const BipartiteGraph& graph, const IndexList& required);

}  // namespace smp

#endif  // SMP_BIPARTITE_HPP_
