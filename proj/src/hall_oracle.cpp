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

#include "smp/hall_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace smp {
namespace {

class WordSet {
 public:
  explicit WordSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void unite(const WordSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Scans subsets of {0..n-1} by size, then lexicographically; returns the
// first whose union is smaller than itself.
std::optional<HallViolator> first_violator(const std::vector<IndexList>& lists,
                                           std::size_t universe, Side side) {
  const std::size_t n = lists.size();
  if (n > kHallSubsetLimit) {
    throw SizeLimitError("Hall enumeration over " + std::to_string(n) +
                         " members exceeds limit of " + std::to_string(kHallSubsetLimit));
  }
  std::vector<WordSet> rows;
  rows.reserve(n);
  for (const auto& l : lists) {
    WordSet row(universe);
    for (Index x : l) row.set(x);
    rows.push_back(std::move(row));
  }
  WordSet acc(universe);
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      acc.clear();
      for (auto i : pick) acc.unite(rows[i]);
      const std::size_t size = acc.count();
      if (size < k) return HallViolator{side, IndexList(pick.begin(), pick.end()), size};
      // next combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Pared lists straight from the definition, kept apart from the solver code.
IndexList pared_girl_list(const SmpInstance& s, Index g) {
  IndexList out;
  for (Index b : s.girl_list(g)) {
    if (!s.boy_listed(b) || s.boy_accepts(b, g)) out.push_back(b);
  }
  return out;
}

IndexList pared_boy_list(const SmpInstance& s, Index b) {
  IndexList out;
  for (Index g : s.boy_list(b)) {
    if (!s.girl_listed(g) || s.girl_accepts(g, b)) out.push_back(g);
  }
  return out;
}

class Backtracker {
 public:
  explicit Backtracker(const SmpInstance& s)
      : s_(s), choice_(s.girl_count(), kNone), boy_used_(s.boy_count(), false) {
    for (Index b = 0; b < s.boy_count(); ++b) {
      if (s.boy_listed(b)) ++uncovered_listed_boys_;
    }
  }

  std::optional<Assignment> run() {
    if (!search(0)) return std::nullopt;
    Assignment a;
    for (Index g = 0; g < choice_.size(); ++g) {
      if (choice_[g] != kNone) a.pairs.push_back({g, choice_[g]});
    }
    return a;
  }

 private:
  static constexpr Index kNone = static_cast<Index>(-1);

  bool admissible(Index g, Index b) const {
    const bool gl = s_.girl_listed(g);
    const bool bl = s_.boy_listed(b);
    if (!gl && !bl) return false;
    if (gl && !s_.girl_accepts(g, b)) return false;
    if (bl && !s_.boy_accepts(b, g)) return false;
    return true;
  }

  bool search(Index g) {
    if (uncovered_listed_boys_ > s_.girl_count() - g) return false;
    if (g == s_.girl_count()) return uncovered_listed_boys_ == 0;
    for (Index b = 0; b < s_.boy_count(); ++b) {
      if (boy_used_[b] || !admissible(g, b)) continue;
      boy_used_[b] = true;
      choice_[g] = b;
      if (s_.boy_listed(b)) --uncovered_listed_boys_;
      if (search(g + 1)) return true;
      if (s_.boy_listed(b)) ++uncovered_listed_boys_;
      choice_[g] = kNone;
      boy_used_[b] = false;
    }
    if (!s_.girl_listed(g)) return search(g + 1);
    return false;
  }

  const SmpInstance& s_;
  std::vector<Index> choice_;
  std::vector<bool> boy_used_;
  std::size_t uncovered_listed_boys_ = 0;
};

}  // namespace

std::optional<HallViolator> hall_condition_cmp(const CmpInstance& cmp) {
  return first_violator(cmp.lists, cmp.right.size(), Side::kGirls);
}

std::optional<HallViolator> hall_bicriteria(const SmpInstance& instance) {
  IndexList girls, boys;
  for (Index g = 0; g < instance.girl_count(); ++g) {
    if (instance.girl_listed(g)) girls.push_back(g);
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    if (instance.boy_listed(b)) boys.push_back(b);
  }
  if (girls.size() > kHallSubsetLimit || boys.size() > kHallSubsetLimit) {
    throw SizeLimitError("listed set exceeds Hall enumeration limit of " +
                         std::to_string(kHallSubsetLimit));
  }
  std::vector<IndexList> lists;
  for (Index g : girls) lists.push_back(pared_girl_list(instance, g));
  if (auto v = first_violator(lists, instance.boy_count(), Side::kGirls)) {
    for (auto& m : v->members) m = girls[m];
    return v;
  }
  lists.clear();
  for (Index b : boys) lists.push_back(pared_boy_list(instance, b));
  if (auto v = first_violator(lists, instance.girl_count(), Side::kBoys)) {
    for (auto& m : v->members) m = boys[m];
    return v;
  }
  return std::nullopt;
}

std::optional<Assignment> oracle_solve(const SmpInstance& instance) {
  if (instance.girl_count() > kBacktrackLimit || instance.boy_count() > kBacktrackLimit) {
    throw SizeLimitError("backtracking oracle limited to " + std::to_string(kBacktrackLimit) +
                         " members per side");
  }
  return Backtracker(instance).run();
}

bool violator_holds(const SmpInstance& instance, const HallViolator& violator) {
  const bool girls = violator.side == Side::kGirls;
  const std::size_t bound = girls ? instance.girl_count() : instance.boy_count();
  std::set<Index> members;
  std::set<Index> partners;
  for (Index m : violator.members) {
    if (m >= bound || !members.insert(m).second) return false;
    if (girls ? !instance.girl_listed(m) : !instance.boy_listed(m)) return false;
    for (Index p : girls ? pared_girl_list(instance, m) : pared_boy_list(instance, m)) {
      partners.insert(p);
    }
  }
  return !members.empty() && partners.size() == violator.union_size &&
         partners.size() < members.size();
}

bool assignment_solves(const SmpInstance& instance, const Assignment& assignment) {
  std::vector<Index> girl_to(instance.girl_count(), static_cast<Index>(-1));
  std::vector<Index> boy_from(instance.boy_count(), static_cast<Index>(-1));
  for (const auto& p : assignment.pairs) {
    if (p.girl >= instance.girl_count() || p.boy >= instance.boy_count()) return false;
    if (girl_to[p.girl] != static_cast<Index>(-1)) return false;
    if (boy_from[p.boy] != static_cast<Index>(-1)) return false;
    girl_to[p.girl] = p.boy;
    boy_from[p.boy] = p.girl;
  }
  for (Index g = 0; g < instance.girl_count(); ++g) {
    if (!instance.girl_listed(g)) continue;
    if (girl_to[g] == static_cast<Index>(-1) || !instance.girl_accepts(g, girl_to[g])) return false;
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    if (!instance.boy_listed(b)) continue;
    if (boy_from[b] == static_cast<Index>(-1) || !instance.boy_accepts(b, boy_from[b])) return false;
  }
  return true;
}

}  // namespace smp
