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

#include "smp/star_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace smp {

StarGraph::StarGraph(const SmpInstance& instance)
    : instance_(&instance),
      list_vertex_of_girl_(instance.girl_count(), kUnmatched),
      list_vertex_of_boy_(instance.boy_count(), kUnmatched) {
  const std::size_t ng = instance.girl_count();
  const std::size_t nb = instance.boy_count();
  for (Index g = 0; g < ng; ++g) {
    if (!instance.girl_listed(g)) continue;
    list_vertex_of_girl_[g] = ng + girl_of_list_.size();
    girl_of_list_.push_back(g);
  }
  for (Index b = 0; b < nb; ++b) {
    if (!instance.boy_listed(b)) continue;
    list_vertex_of_boy_[b] = nb + boy_of_list_.size();
    boy_of_list_.push_back(b);
  }

  std::vector<IndexList> adjacency(ng + girl_of_list_.size());
  for (Index g = 0; g < ng; ++g) {
    if (!instance.girl_listed(g)) continue;
    for (Index b : instance.girl_list(g)) {
      if (!instance.boy_listed(b)) {
        adjacency[g].push_back(b);
      } else if (instance.boy_accepts(b, g)) {
        adjacency[g].push_back(list_vertex_of_boy_[b]);
        adjacency[list_vertex_of_girl_[g]].push_back(b);
      }
    }
  }
  for (Index b = 0; b < nb; ++b) {
    for (Index g : instance.boy_list(b)) {
      if (!instance.girl_listed(g)) adjacency[g].push_back(b);
    }
  }
  const std::size_t left = adjacency.size();
  graph_ = BipartiteGraph(left, nb + boy_of_list_.size(), std::move(adjacency));
}

Index StarGraph::girl_list_vertex(Index g) const {
  Index v = list_vertex_of_girl_.at(g);
  if (v == kUnmatched) throw ContractError("girl has no list vertex");
  return v;
}

Index StarGraph::boy_list_vertex(Index b) const {
  Index v = list_vertex_of_boy_.at(b);
  if (v == kUnmatched) throw ContractError("boy has no list vertex");
  return v;
}

StarGraph build_star_graph(const SmpInstance& instance) { return StarGraph(instance); }

namespace {

// Boy b such that girl g is matched to L_b.
std::optional<Index> girl_to_boy_list(const StarGraph& s, const Matching& m, Index g) {
  Index r = m.left_mate(g);
  if (r == kUnmatched || s.is_boy_vertex(r)) return std::nullopt;
  return s.boy_of_list_vertex(r);
}

// Boy b matched to L_g.
std::optional<Index> girl_list_partner(const StarGraph& s, const Matching& m, Index g) {
  if (!s.instance().girl_listed(g)) return std::nullopt;
  Index r = m.left_mate(s.girl_list_vertex(g));
  if (r == kUnmatched) return std::nullopt;
  return r;
}

std::optional<Mismatch> mismatch_at(const StarGraph& s, const Matching& m, MismatchKind kind,
                                    Index g) {
  const auto via_boy_list = girl_to_boy_list(s, m, g);
  const auto via_girl_list = girl_list_partner(s, m, g);
  if (kind == MismatchKind::kGirlToBoyList) {
    if (via_boy_list && via_girl_list != via_boy_list) return Mismatch{kind, g, *via_boy_list};
  } else {
    if (via_girl_list && via_boy_list != via_girl_list) return Mismatch{kind, g, *via_girl_list};
  }
  return std::nullopt;
}

struct Vertex {
  bool left;
  Index id;
};

// Chases one chain of mismatched edges and applies the swap that closes it.
// Written for a chain that starts at a "primary" person p1 matched to the
// list vertex of a "secondary" person q1, while L_p1 is not matched to q1.
// With mirrored == false primaries are girls; otherwise they are boys.
class ChainRepair {
 public:
  ChainRepair(const StarGraph& s, Matching& m, bool mirrored) : s_(s), m_(m), mirrored_(mirrored) {}

  // Returns true if the chain closed as a cycle.
  bool run(Index p1, Index q1) {
    std::vector<Index> ps{p1};
    std::vector<Index> qs{q1};
    const std::size_t limit = s_.girl_count() + s_.boy_count() + 1;
    while (ps.size() <= limit) {
      const std::size_t k = ps.size();
      // Right-hand step: who holds L_{p_k}?
      const auto x = list_partner_of_primary(ps.back());
      if (!x) {
        for (std::size_t i = 0; i + 1 < k; ++i) unmatch(primary_list(ps[i]));
        unmatch(secondary(qs[0]));
        for (std::size_t i = 0; i < k; ++i) link(primary_list(ps[i]), secondary(qs[i]));
        return false;
      }
      if (*x == qs[0]) {
        for (std::size_t i = 0; i < k; ++i) unmatch(primary_list(ps[i]));
        for (std::size_t i = 0; i < k; ++i) link(primary_list(ps[i]), secondary(qs[i]));
        return true;
      }
      if (std::find(qs.begin(), qs.end(), *x) != qs.end()) {
        throw std::logic_error("repair_mismatches: chain revisited a list vertex");
      }
      qs.push_back(*x);
      // Left-hand step: who holds L_{q_{k+1}}?
      const auto y = list_partner_of_secondary(qs.back());
      if (!y) {
        for (std::size_t i = 0; i < k; ++i) unmatch(primary(ps[i]));
        for (std::size_t i = 0; i < k; ++i) link(primary(ps[i]), secondary_list(qs[i + 1]));
        return false;
      }
      if (std::find(ps.begin(), ps.end(), *y) != ps.end()) {
        throw std::logic_error("repair_mismatches: chain revisited a person vertex");
      }
      ps.push_back(*y);
    }
    throw std::logic_error("repair_mismatches: chain did not terminate");
  }

 private:
  Vertex primary(Index p) const { return {!mirrored_, p}; }
  Vertex secondary(Index q) const { return {mirrored_, q}; }
  Vertex primary_list(Index p) const {
    return mirrored_ ? Vertex{false, s_.boy_list_vertex(p)} : Vertex{true, s_.girl_list_vertex(p)};
  }
  Vertex secondary_list(Index q) const {
    return mirrored_ ? Vertex{true, s_.girl_list_vertex(q)} : Vertex{false, s_.boy_list_vertex(q)};
  }

  Index mate(Vertex v) const { return v.left ? m_.left_mate(v.id) : m_.right_mate(v.id); }

  // A list vertex is only adjacent to person vertices of the other side.
  std::optional<Index> list_partner_of_primary(Index p) const {
    Index x = mate(primary_list(p));
    if (x == kUnmatched) return std::nullopt;
    return x;
  }
  std::optional<Index> list_partner_of_secondary(Index q) const {
    Index y = mate(secondary_list(q));
    if (y == kUnmatched) return std::nullopt;
    return y;
  }

  void unmatch(Vertex v) {
    if (v.left) {
      m_.unmatch_left(v.id);
    } else {
      m_.unmatch_right(v.id);
    }
  }
  void link(Vertex a, Vertex b) {
    if (a.left) {
      m_.match(a.id, b.id);
    } else {
      m_.match(b.id, a.id);
    }
  }

  const StarGraph& s_;
  Matching& m_;
  bool mirrored_;
};

void require_full_cover(const StarGraph& s, const Matching& m) {
  if (m.left_count() != s.graph().left_count() || m.right_count() != s.graph().right_count() ||
      !m.is_valid_for(s.graph())) {
    throw ContractError("matching does not belong to this star graph");
  }
  if (m.size() != s.cover_size()) {
    throw ContractError("matching size " + std::to_string(m.size()) + " differs from |G_L|+|B_L| = " +
                        std::to_string(s.cover_size()));
  }
  const auto& inst = s.instance();
  for (Index g = 0; g < s.girl_count(); ++g) {
    if (inst.girl_listed(g) && !m.left_covered(g)) throw ContractError("listed girl left uncovered");
  }
  for (Index b = 0; b < s.boy_count(); ++b) {
    if (inst.boy_listed(b) && !m.right_covered(b)) throw ContractError("listed boy left uncovered");
  }
}

SolveResult finish(const StarGraph& star, const Matching& m) {
  auto repaired = repair_mismatches(star, m);
  return extract_assignment(star, repaired.matching);
}

std::optional<HallViolator> cmp_violator(const CmpInstance& cmp, const IndexList& origin,
                                         Side side) {
  BipartiteGraph g(cmp.left.size(), cmp.right.size(), cmp.lists);
  IndexList all(cmp.left.size());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  auto cert = deficiency_certificate(g, all);
  if (!cert) return std::nullopt;
  HallViolator v{side, {}, cert->neighborhood.size()};
  for (Index i : cert->subset) v.members.push_back(origin[i]);
  std::sort(v.members.begin(), v.members.end());
  return v;
}

}  // namespace

MismatchReport find_mismatches(const StarGraph& star, const Matching& matching) {
  MismatchReport report;
  for (auto kind : {MismatchKind::kGirlToBoyList, MismatchKind::kBoyToGirlList}) {
    for (Index g = 0; g < star.girl_count(); ++g) {
      if (auto mm = mismatch_at(star, matching, kind, g)) report.mismatched.push_back(*mm);
    }
  }
  return report;
}

RepairResult repair_mismatches(const StarGraph& star, const Matching& matching,
                               bool trace_counts) {
  require_full_cover(star, matching);
  RepairResult result;
  result.matching = matching;
  result.initial_mismatches = find_mismatches(star, matching).count();
  std::size_t remaining = result.initial_mismatches;
  // Without tracing only the cheap bound is enforced: iterations <= K.

  // Repairs never create mismatches, so the smallest remaining one only moves
  // forward and a single ordered sweep visits each start once.
  for (auto kind : {MismatchKind::kGirlToBoyList, MismatchKind::kBoyToGirlList}) {
    for (Index g = 0; g < star.girl_count(); ++g) {
      while (auto mm = mismatch_at(star, result.matching, kind, g)) {
        if (result.iterations == result.initial_mismatches) {
          throw std::logic_error("repair_mismatches: exceeded initial mismatch count");
        }
        const bool mirrored = kind == MismatchKind::kBoyToGirlList;
        ChainRepair chain(star, result.matching, mirrored);
        const bool cycle = mirrored ? chain.run(mm->boy, mm->girl) : chain.run(mm->girl, mm->boy);
        if (cycle) ++result.cycle_closures;
        ++result.iterations;
        if (trace_counts) {
          const std::size_t now = find_mismatches(star, result.matching).count();
          if (now >= remaining) {
            throw std::logic_error("repair_mismatches: mismatch count did not drop");
          }
          remaining = now;
          result.counts.push_back(now);
        }
      }
    }
  }
  return result;
}

Assignment extract_assignment(const StarGraph& star, const Matching& matching) {
  require_full_cover(star, matching);
  Assignment out;
  for (Index g = 0; g < star.girl_count(); ++g) {
    Index r = matching.left_mate(g);
    if (r == kUnmatched) continue;
    if (star.is_boy_vertex(r)) {
      out.pairs.push_back({g, r});
      continue;
    }
    Index b = star.boy_of_list_vertex(r);
    if (girl_list_partner(star, matching, g) != b) {
      throw ContractError("extract_assignment: matching still has mismatched edges");
    }
    out.pairs.push_back({g, b});
  }
  for (Index g = 0; g < star.girl_count(); ++g) {
    if (mismatch_at(star, matching, MismatchKind::kBoyToGirlList, g)) {
      throw ContractError("extract_assignment: matching still has mismatched edges");
    }
  }
  return out;
}

std::optional<HallViolator> subproblem_violator(const SmpInstance& instance) {
  const auto sub = cmp_subproblems(instance);
  if (auto v = cmp_violator(sub.girls, sub.girl_origin, Side::kGirls)) return v;
  return cmp_violator(sub.boys, sub.boy_origin, Side::kBoys);
}

SolveResult solve(const SmpInstance& instance) {
  const StarGraph star(instance);
  const Matching m = max_matching(star.graph());
  if (m.size() == star.cover_size()) return finish(star, m);
  auto violator = subproblem_violator(instance);
  if (!violator) {
    throw std::logic_error("solve: star matching deficient but both subproblems solvable");
  }
  return Unsolvable{*violator};
}

SolveResult solve_via_subproblems(const SmpInstance& instance) {
  const auto sub = cmp_subproblems(instance);
  const BipartiteGraph girls_graph(sub.girls.left.size(), sub.girls.right.size(), sub.girls.lists);
  const BipartiteGraph boys_graph(sub.boys.left.size(), sub.boys.right.size(), sub.boys.lists);
  const Matching girls_m = max_matching(girls_graph);
  if (girls_m.size() < sub.girls.left.size()) {
    return Unsolvable{*cmp_violator(sub.girls, sub.girl_origin, Side::kGirls)};
  }
  const Matching boys_m = max_matching(boys_graph);
  if (boys_m.size() < sub.boys.left.size()) {
    return Unsolvable{*cmp_violator(sub.boys, sub.boy_origin, Side::kBoys)};
  }

  const StarGraph star(instance);
  Matching m(star.graph().left_count(), star.graph().right_count());
  for (const auto& [i, b] : girls_m.pairs()) {
    const Index g = sub.girl_origin[i];
    m.match(g, instance.boy_listed(b) ? star.boy_list_vertex(b) : b);
  }
  for (const auto& [j, g] : boys_m.pairs()) {
    const Index b = sub.boy_origin[j];
    m.match(instance.girl_listed(g) ? star.girl_list_vertex(g) : g, b);
  }
  return finish(star, m);
}

}  // namespace smp
