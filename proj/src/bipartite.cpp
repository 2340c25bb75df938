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

#include "smp/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace smp {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count,
                               std::vector<IndexList> adjacency)
    : left_count_(left_count), right_count_(right_count), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != left_count_) {
    throw std::invalid_argument("adjacency size does not match left vertex count");
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw std::invalid_argument("duplicate edge");
    }
    if (!row.empty() && row.back() >= right_count_) {
      throw std::invalid_argument("edge target out of range");
    }
  }
}

bool BipartiteGraph::has_edge(Index left, Index right) const {
  const auto& row = adjacency_.at(left);
  return std::binary_search(row.begin(), row.end(), right);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : adjacency_) n += row.size();
  return n;
}

void Matching::match(Index left, Index right) {
  if (left_mate_.at(left) != kUnmatched || right_mate_.at(right) != kUnmatched) {
    throw ContractError("match: endpoint already matched");
  }
  left_mate_[left] = right;
  right_mate_[right] = left;
}

void Matching::unmatch_left(Index left) {
  Index right = left_mate_.at(left);
  if (right == kUnmatched) return;
  left_mate_[left] = kUnmatched;
  right_mate_[right] = kUnmatched;
}

void Matching::unmatch_right(Index right) {
  Index left = right_mate_.at(right);
  if (left == kUnmatched) return;
  left_mate_[left] = kUnmatched;
  right_mate_[right] = kUnmatched;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
      std::count_if(left_mate_.begin(), left_mate_.end(), [](Index r) { return r != kUnmatched; }));
}

std::vector<std::pair<Index, Index>> Matching::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index l = 0; l < left_mate_.size(); ++l) {
    if (left_mate_[l] != kUnmatched) out.emplace_back(l, left_mate_[l]);
  }
  return out;
}

bool Matching::is_valid_for(const BipartiteGraph& graph) const {
  if (left_mate_.size() != graph.left_count() || right_mate_.size() != graph.right_count()) {
    return false;
  }
  for (Index l = 0; l < left_mate_.size(); ++l) {
    Index r = left_mate_[l];
    if (r == kUnmatched) continue;
    if (r >= right_mate_.size() || right_mate_[r] != l || !graph.has_edge(l, r)) return false;
  }
  for (Index r = 0; r < right_mate_.size(); ++r) {
    Index l = right_mate_[r];
    if (l != kUnmatched && (l >= left_mate_.size() || left_mate_[l] != r)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& graph, const std::vector<bool>& allowed)
      : graph_(graph),
        allowed_(allowed),
        matching_(graph.left_count(), graph.right_count()),
        left_mate_(graph.left_count(), kUnmatched),
        right_mate_(graph.right_count(), kUnmatched),
        dist_(graph.left_count(), kInfinity),
        cursor_(graph.left_count(), 0) {}

  Matching run() {
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (Index u = 0; u < graph_.left_count(); ++u) {
        if (allowed_[u] && left_mate_[u] == kUnmatched) augment_from(u);
      }
    }
    for (Index u = 0; u < graph_.left_count(); ++u) {
      if (left_mate_[u] != kUnmatched) matching_.match(u, left_mate_[u]);
    }
    return matching_;
  }

 private:
  // Builds BFS layers from free allowed left vertices. Returns whether a
  // free right vertex is reachable.
  bool layer() {
    std::deque<Index> queue;
    for (Index u = 0; u < graph_.left_count(); ++u) {
      if (allowed_[u] && left_mate_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      Index u = queue.front();
      queue.pop_front();
      for (Index v : graph_.neighbors(u)) {
        Index w = right_mate_[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInfinity) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS; augments along the first path found.
  void augment_from(Index root) {
    stack_.assign(1, root);
    while (!stack_.empty()) {
      Index u = stack_.back();
      auto nbrs = graph_.neighbors(u);
      if (cursor_[u] == nbrs.size()) {
        dist_[u] = kInfinity;
        stack_.pop_back();
        if (!stack_.empty()) ++cursor_[stack_.back()];
        continue;
      }
      Index v = nbrs[cursor_[u]];
      Index w = right_mate_[v];
      if (w == kUnmatched) {
        for (Index x : stack_) {
          Index vx = graph_.neighbors(x)[cursor_[x]];
          left_mate_[x] = vx;
          right_mate_[vx] = x;
        }
        return;
      }
      if (dist_[w] == dist_[u] + 1) {
        stack_.push_back(w);
      } else {
        ++cursor_[u];
      }
    }
  }

  const BipartiteGraph& graph_;
  const std::vector<bool>& allowed_;
  Matching matching_;
  std::vector<Index> left_mate_;
  std::vector<Index> right_mate_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<Index> stack_;
};

}  // namespace

Matching max_matching(const BipartiteGraph& graph, const std::vector<bool>& allowed_left) {
  if (allowed_left.size() != graph.left_count()) {
    throw ContractError("allowed_left size does not match left vertex count");
  }
  return HopcroftKarp(graph, allowed_left).run();
}

Matching max_matching(const BipartiteGraph& graph) {
  return max_matching(graph, std::vector<bool>(graph.left_count(), true));
}

IndexList uncovered_left(const BipartiteGraph& graph, const Matching& matching) {
  IndexList out;
  for (Index u = 0; u < graph.left_count(); ++u) {
    if (!matching.left_covered(u)) out.push_back(u);
  }
  return out;
}

std::optional<DeficiencyCertificate> deficiency_certificate(const BipartiteGraph& graph,
                                                            const IndexList& required) {
  std::vector<bool> allowed(graph.left_count(), false);
  for (Index u : required) {
    if (u >= graph.left_count()) throw ContractError("required vertex out of range");
    allowed[u] = true;
  }
  const Matching m = max_matching(graph, allowed);

  Index start = kUnmatched;
  for (Index u = 0; u < graph.left_count(); ++u) {
    if (allowed[u] && !m.left_covered(u)) {
      start = u;
      break;
    }
  }
  if (start == kUnmatched) return std::nullopt;

  // Every right vertex reached is matched, otherwise the matching would not
  // be maximum; so |neighborhood| = |subset| - 1.
  std::vector<bool> seen_left(graph.left_count(), false);
  std::vector<bool> seen_right(graph.right_count(), false);
  std::deque<Index> queue{start};
  seen_left[start] = true;
  while (!queue.empty()) {
    Index u = queue.front();
    queue.pop_front();
    for (Index v : graph.neighbors(u)) {
      if (seen_right[v]) continue;
      seen_right[v] = true;
      Index w = m.right_mate(v);
      if (w == kUnmatched) throw std::logic_error("deficiency_certificate: matching not maximum");
      if (!seen_left[w]) {
        seen_left[w] = true;
        queue.push_back(w);
      }
    }
  }
  DeficiencyCertificate cert;
  for (Index u = 0; u < graph.left_count(); ++u) {
    if (seen_left[u]) cert.subset.push_back(u);
  }
  for (Index v = 0; v < graph.right_count(); ++v) {
    if (seen_right[v]) cert.neighborhood.push_back(v);
  }
  return cert;
}

}  // namespace smp
