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

// Solver built on the "star graph" of an SMP instance. Besides one node per
// girl and per boy it has a list node L_g for every listed girl and L_b for
// every listed boy:
//
//   left  = girls            | L_g for g in G_L
//   right = boys             | L_b for b in B_L
//
//   g -- b     b on g's list and b unlisted, or g on b's list and g unlisted
//   g -- L_b   g and b list compatible
//   L_g -- b   g and b list compatible
//
// G_L ∪ B_L is a vertex cover touching each edge exactly once, so a matching
// has at most |G_L| + |B_L| edges and reaching that size is equivalent to
// solvability. A maximum matching may still pair g with L_b while b sits on
// some other L_g'; repair_mismatches rotates such chains until every
// (g, L_b) edge comes with its partner (L_g, b).

#ifndef SMP_STAR_SOLVER_HPP_
#define SMP_STAR_SOLVER_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "smp/bipartite.hpp"
#include "smp/hall_oracle.hpp"
#include "smp/instance.hpp"

namespace smp {

class StarGraph {
 public:
  explicit StarGraph(const SmpInstance& instance);

  const SmpInstance& instance() const { return *instance_; }
  const BipartiteGraph& graph() const { return graph_; }

  std::size_t girl_count() const { return instance_->girl_count(); }
  std::size_t boy_count() const { return instance_->boy_count(); }
  std::size_t listed_girl_count() const { return girl_of_list_.size(); }
  std::size_t listed_boy_count() const { return boy_of_list_.size(); }
  // |G_L| + |B_L|.
  std::size_t cover_size() const { return listed_girl_count() + listed_boy_count(); }

  // Vertex ids. Girl g is left vertex g; boy b is right vertex b.
  Index girl_vertex(Index g) const { return g; }
  Index boy_vertex(Index b) const { return b; }
  // Throws ContractError for an unlisted member.
  Index girl_list_vertex(Index g) const;  // left vertex L_g
  Index boy_list_vertex(Index b) const;   // right vertex L_b

  bool is_girl_vertex(Index left) const { return left < girl_count(); }
  bool is_boy_vertex(Index right) const { return right < boy_count(); }
  // Owner of a list vertex: L_g -> g, L_b -> b.
  Index girl_of_list_vertex(Index left) const { return girl_of_list_.at(left - girl_count()); }
  Index boy_of_list_vertex(Index right) const { return boy_of_list_.at(right - boy_count()); }

 private:
  const SmpInstance* instance_;
  std::vector<Index> list_vertex_of_girl_;
  std::vector<Index> list_vertex_of_boy_;
  IndexList girl_of_list_;
  IndexList boy_of_list_;
  BipartiteGraph graph_;
};

// The instance must outlive the returned graph.
StarGraph build_star_graph(const SmpInstance& instance);

enum class MismatchKind {
  kGirlToBoyList,  // (g, L_b) matched, (L_g, b) not
  kBoyToGirlList,  // (L_g, b) matched, (g, L_b) not
};

struct Mismatch {
  MismatchKind kind;
  Index girl;
  Index boy;

  auto operator<=>(const Mismatch&) const = default;
};

// Sorted by (kind, girl, boy).
struct MismatchReport {
  std::vector<Mismatch> mismatched;
  std::size_t count() const { return mismatched.size(); }
};

MismatchReport find_mismatches(const StarGraph& star, const Matching& matching);

struct RepairResult {
  Matching matching;
  std::size_t initial_mismatches = 0;
  std::size_t iterations = 0;
  std::vector<std::size_t> counts;  // per-iteration mismatch counts, if traced
  std::size_t cycle_closures = 0;   // iterations that ended by closing a cycle
};

// Requires a matching of size |G_L| + |B_L| covering every listed girl and
// boy vertex; throws ContractError otherwise. Returns a matching of the same
// size and coverage with no mismatched edges. `trace_counts` recounts the
// mismatches after every iteration (O(V) each) and checks they strictly drop.
RepairResult repair_mismatches(const StarGraph& star, const Matching& matching,
                               bool trace_counts = false);

// Requires a mismatch-free matching of size |G_L| + |B_L|.
Assignment extract_assignment(const StarGraph& star, const Matching& matching);

struct Unsolvable {
  HallViolator violator;

  bool operator==(const Unsolvable&) const = default;
};

using SolveResult = std::variant<Assignment, Unsolvable>;

// One maximum matching of the whole star graph, then repair and extraction.
SolveResult solve(const SmpInstance& instance);

// Solves the girls' and boys' classical subproblems separately, glues the
// two vertex-disjoint matchings inside the star graph, then repairs.
SolveResult solve_via_subproblems(const SmpInstance& instance);

// Hall violator of the first failing classical subproblem (girls first), by
// alternating reachability on the subproblem's matching graph.
std::optional<HallViolator> subproblem_violator(const SmpInstance& instance);

}  // namespace smp

#endif  // SMP_STAR_SOLVER_HPP_
