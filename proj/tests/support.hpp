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

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the matching code it is used to check.

#ifndef SMP_TESTS_SUPPORT_HPP_
#define SMP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "smp/bipartite.hpp"
#include "smp/instance.hpp"

namespace smp::testing {

using Lists = std::map<std::string, std::vector<std::string>>;

inline NamedInstance named(std::vector<std::string> girls, std::vector<std::string> boys,
                           const Lists& girl_lists, const Lists& boy_lists) {
  NamedInstance n{girls, boys, {}, {}};
  for (const auto& g : girls) {
    auto it = girl_lists.find(g);
    n.girl_lists.push_back(it == girl_lists.end() ? std::vector<std::string>{} : it->second);
  }
  for (const auto& b : boys) {
    auto it = boy_lists.find(b);
    n.boy_lists.push_back(it == boy_lists.end() ? std::vector<std::string>{} : it->second);
  }
  return n;
}

inline SmpInstance make(std::vector<std::string> girls, std::vector<std::string> boys,
                        const Lists& girl_lists, const Lists& boy_lists) {
  return SmpInstance(named(std::move(girls), std::move(boys), girl_lists, boy_lists));
}

// I1: g1 lists both boys, b1 lists only g2; g2 and b2 are wildcards.
inline SmpInstance instance_i1() {
  return make({"g1", "g2"}, {"b1", "b2"}, {{"g1", {"b1", "b2"}}}, {{"b1", {"g2"}}});
}

// I3: 2 x 2, everybody lists everybody.
inline SmpInstance instance_i3() {
  return make({"g1", "g2"}, {"b1", "b2"}, {{"g1", {"b1", "b2"}}, {"g2", {"b1", "b2"}}},
              {{"b1", {"g1", "g2"}}, {"b2", {"g1", "g2"}}});
}

// Two girls who both want the only boy.
inline SmpInstance two_girls_one_boy() {
  return make({"g1", "g2"}, {"b1"}, {{"g1", {"b1"}}, {"g2", {"b1"}}}, {});
}

inline std::vector<std::pair<std::string, std::string>> names_of(const SmpInstance& s,
                                                                  const Assignment& a) {
  return assignment_names(s, a);
}

// Largest matching by exhaustive search over left vertices.
inline std::size_t brute_max_matching(const BipartiteGraph& g) {
  std::vector<bool> used(g.right_count(), false);
  std::function<std::size_t(Index)> go = [&](Index u) -> std::size_t {
    if (u == g.left_count()) return 0;
    std::size_t best = go(u + 1);
    for (Index v : g.neighbors(u)) {
      if (used[v]) continue;
      used[v] = true;
      best = std::max(best, 1 + go(u + 1));
      used[v] = false;
    }
    return best;
  };
  return go(0);
}

// Whether some matching covers every vertex in `required`.
inline bool brute_covers(const BipartiteGraph& g, const IndexList& required) {
  std::vector<bool> used(g.right_count(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == required.size()) return true;
    for (Index v : g.neighbors(required[k])) {
      if (used[v]) continue;
      used[v] = true;
      if (go(k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return go(0);
}

// Random bipartite graph with edge probability `density`.
template <typename Rng>
BipartiteGraph random_graph(Rng& rng, std::size_t left, std::size_t right, double density) {
  std::vector<IndexList> adj(left);
  for (Index u = 0; u < left; ++u) {
    for (Index v = 0; v < right; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) adj[u].push_back(v);
    }
  }
  return BipartiteGraph(left, right, std::move(adj));
}

// Maximum matching by Kuhn's algorithm with shuffled neighbor order, so that
// repeated calls produce many different maximum matchings.
template <typename Rng>
Matching shuffled_max_matching(const BipartiteGraph& g, Rng& rng) {
  Matching m(g.left_count(), g.right_count());
  std::vector<IndexList> adj(g.left_count());
  for (Index u = 0; u < g.left_count(); ++u) {
    adj[u].assign(g.neighbors(u).begin(), g.neighbors(u).end());
    std::shuffle(adj[u].begin(), adj[u].end(), rng);
  }
  IndexList order(g.left_count());
  for (Index u = 0; u < order.size(); ++u) order[u] = u;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Index> right_mate(g.right_count(), kUnmatched);
  std::vector<char> seen;
  std::function<bool(Index)> augment = [&](Index u) {
    for (Index v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (right_mate[v] == kUnmatched || augment(right_mate[v])) {
        right_mate[v] = u;
        return true;
      }
    }
    return false;
  };
  for (Index u : order) {
    seen.assign(g.right_count(), 0);
    augment(u);
  }
  for (Index v = 0; v < g.right_count(); ++v) {
    if (right_mate[v] != kUnmatched) m.match(right_mate[v], v);
  }
  return m;
}

// Instance on girls g1..gn, boys b1..bm with lists given as bitmasks.
inline SmpInstance from_masks(std::size_t girls, std::size_t boys,
                              const std::vector<std::uint32_t>& girl_masks,
                              const std::vector<std::uint32_t>& boy_masks) {
  std::vector<std::string> gn, bn;
  for (std::size_t i = 1; i <= girls; ++i) gn.push_back("g" + std::to_string(i));
  for (std::size_t i = 1; i <= boys; ++i) bn.push_back("b" + std::to_string(i));
  std::vector<IndexList> gl(girls), bl(boys);
  for (std::size_t g = 0; g < girls; ++g) {
    for (std::size_t b = 0; b < boys; ++b) {
      if (girl_masks[g] >> b & 1u) gl[g].push_back(b);
    }
  }
  for (std::size_t b = 0; b < boys; ++b) {
    for (std::size_t g = 0; g < girls; ++g) {
      if (boy_masks[b] >> g & 1u) bl[b].push_back(g);
    }
  }
  return SmpInstance(gn, bn, gl, bl);
}

// Calls `f` on all 8^6 list patterns of a 3 x 3 instance.
template <typename F>
void for_each_3x3(F&& f) {
  std::vector<std::uint32_t> gm(3), bm(3);
  for (std::uint32_t code = 0; code < (1u << 18); ++code) {
    for (int i = 0; i < 3; ++i) gm[i] = (code >> (3 * i)) & 7u;
    for (int i = 0; i < 3; ++i) bm[i] = (code >> (9 + 3 * i)) & 7u;
    f(from_masks(3, 3, gm, bm));
  }
}

}  // namespace smp::testing

#endif  // SMP_TESTS_SUPPORT_HPP_
