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

#include "smp/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace smp {

const char* side_name(Side side) {
  return side == Side::kGirls ? "girls" : "boys";
}

namespace {

void check_side(const std::vector<std::string>& members, const char* noun,
                std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& m : members) {
    if (!seen.insert(m).second) out.push_back("duplicate " + std::string(noun) + " " + m);
  }
}

void check_lists(const std::vector<std::string>& owners,
                 const std::vector<std::vector<std::string>>& lists,
                 const std::set<std::string>& targets, const char* owner_noun,
                 const char* target_noun, std::vector<std::string>& out) {
  if (lists.size() != owners.size()) {
    out.push_back(std::string(owner_noun) + " list count " +
                  std::to_string(lists.size()) + " does not match " +
                  std::to_string(owners.size()) + " members");
    return;
  }
  for (std::size_t i = 0; i < owners.size(); ++i) {
    std::set<std::string> seen;
    for (const auto& t : lists[i]) {
      if (!targets.count(t)) {
        out.push_back("unknown " + std::string(target_noun) + " " + t +
                      " in list of " + owners[i]);
      } else if (!seen.insert(t).second) {
        out.push_back("duplicate " + std::string(target_noun) + " " + t +
                      " in list of " + owners[i]);
      }
    }
  }
}

bool contains_sorted(const IndexList& sorted, Index value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace

std::vector<std::string> validate(const NamedInstance& instance) {
  std::vector<std::string> out;
  check_side(instance.girls, "girl", out);
  check_side(instance.boys, "boy", out);
  const std::set<std::string> girls(instance.girls.begin(), instance.girls.end());
  const std::set<std::string> boys(instance.boys.begin(), instance.boys.end());
  check_lists(instance.girls, instance.girl_lists, boys, "girl", "boy", out);
  check_lists(instance.boys, instance.boy_lists, girls, "boy", "girl", out);
  return out;
}

SmpInstance::SmpInstance(const NamedInstance& named) {
  auto violations = validate(named);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw std::invalid_argument(msg.str());
  }
  girls_ = named.girls;
  boys_ = named.boys;
  index_names();
  girl_lists_.resize(girls_.size());
  boy_lists_.resize(boys_.size());
  for (Index g = 0; g < girls_.size(); ++g) {
    for (const auto& b : named.girl_lists[g]) girl_lists_[g].push_back(boy_index_.at(b));
  }
  for (Index b = 0; b < boys_.size(); ++b) {
    for (const auto& g : named.boy_lists[b]) boy_lists_[b].push_back(girl_index_.at(g));
  }
  girl_sorted_ = girl_lists_;
  boy_sorted_ = boy_lists_;
  for (auto& l : girl_sorted_) std::sort(l.begin(), l.end());
  for (auto& l : boy_sorted_) std::sort(l.begin(), l.end());
}

SmpInstance::SmpInstance(std::vector<std::string> girls,
                         std::vector<std::string> boys,
                         std::vector<IndexList> girl_lists,
                         std::vector<IndexList> boy_lists)
    : girls_(std::move(girls)),
      boys_(std::move(boys)),
      girl_lists_(std::move(girl_lists)),
      boy_lists_(std::move(boy_lists)) {
  if (girl_lists_.size() != girls_.size() || boy_lists_.size() != boys_.size()) {
    throw std::invalid_argument("list count does not match member count");
  }
  index_names();
  if (girl_index_.size() != girls_.size() || boy_index_.size() != boys_.size()) {
    throw std::invalid_argument("duplicate member name");
  }
  auto sorted_unique = [](const std::vector<IndexList>& lists, std::size_t bound) {
    std::vector<IndexList> sorted = lists;
    for (auto& l : sorted) {
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
        throw std::invalid_argument("duplicate list entry");
      }
      if (!l.empty() && l.back() >= bound) {
        throw std::invalid_argument("list entry out of range");
      }
    }
    return sorted;
  };
  girl_sorted_ = sorted_unique(girl_lists_, boys_.size());
  boy_sorted_ = sorted_unique(boy_lists_, girls_.size());
}

void SmpInstance::index_names() {
  girl_index_.clear();
  boy_index_.clear();
  for (Index i = 0; i < girls_.size(); ++i) girl_index_.emplace(girls_[i], i);
  for (Index i = 0; i < boys_.size(); ++i) boy_index_.emplace(boys_[i], i);
}

bool SmpInstance::girl_accepts(Index g, Index b) const {
  return contains_sorted(girl_sorted_.at(g), b);
}

bool SmpInstance::boy_accepts(Index b, Index g) const {
  return contains_sorted(boy_sorted_.at(b), g);
}

std::optional<Index> SmpInstance::find_girl(const std::string& name) const {
  auto it = girl_index_.find(name);
  if (it == girl_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> SmpInstance::find_boy(const std::string& name) const {
  auto it = boy_index_.find(name);
  if (it == boy_index_.end()) return std::nullopt;
  return it->second;
}

NamedInstance SmpInstance::to_named() const {
  NamedInstance named{girls_, boys_, {}, {}};
  for (const auto& l : girl_lists_) {
    auto& out = named.girl_lists.emplace_back();
    for (Index b : l) out.push_back(boys_[b]);
  }
  for (const auto& l : boy_lists_) {
    auto& out = named.boy_lists.emplace_back();
    for (Index g : l) out.push_back(girls_[g]);
  }
  return named;
}

std::optional<Index> CmpInstance::first_empty_list() const {
  for (Index i = 0; i < lists.size(); ++i) {
    if (lists[i].empty()) return i;
  }
  return std::nullopt;
}

std::vector<std::string> validate(const CmpInstance& cmp) {
  std::vector<std::string> out;
  check_side(cmp.left, "left member", out);
  check_side(cmp.right, "right member", out);
  if (cmp.lists.size() != cmp.left.size()) {
    out.push_back("list count does not match left size");
    return out;
  }
  for (Index i = 0; i < cmp.lists.size(); ++i) {
    if (cmp.lists[i].empty()) out.push_back("empty list for " + cmp.left[i]);
    std::set<Index> seen;
    for (Index r : cmp.lists[i]) {
      if (r >= cmp.right.size()) {
        out.push_back("right index " + std::to_string(r) + " out of range in list of " + cmp.left[i]);
      } else if (!seen.insert(r).second) {
        out.push_back("duplicate " + cmp.right[r] + " in list of " + cmp.left[i]);
      }
    }
  }
  return out;
}

ListedSets listed_sets(const SmpInstance& instance) {
  ListedSets sets;
  for (Index g = 0; g < instance.girl_count(); ++g) {
    if (instance.girl_listed(g)) sets.girls.push_back(g);
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    if (instance.boy_listed(b)) sets.boys.push_back(b);
  }
  return sets;
}

bool is_list_compatible(const SmpInstance& instance, Index g, Index b) {
  if (!instance.girl_listed(g) || !instance.boy_listed(b)) {
    throw ContractError("list compatibility needs both members to have lists");
  }
  return instance.girl_accepts(g, b) && instance.boy_accepts(b, g);
}

ParedLists pare_lists(const SmpInstance& instance) {
  ParedLists pared;
  for (Index g = 0; g < instance.girl_count(); ++g) {
    if (!instance.girl_listed(g)) continue;
    auto& out = pared.girls[g];
    for (Index b : instance.girl_list(g)) {
      if (!instance.boy_listed(b) || instance.boy_accepts(b, g)) out.push_back(b);
    }
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    if (!instance.boy_listed(b)) continue;
    auto& out = pared.boys[b];
    for (Index g : instance.boy_list(b)) {
      if (!instance.girl_listed(g) || instance.girl_accepts(g, b)) out.push_back(g);
    }
  }
  return pared;
}

CmpSubproblems cmp_subproblems(const SmpInstance& instance) {
  const auto pared = pare_lists(instance);
  CmpSubproblems sub;
  sub.girls.right = instance.boys();
  sub.boys.right = instance.girls();
  for (const auto& [g, list] : pared.girls) {
    sub.girls.left.push_back(instance.girl_name(g));
    sub.girls.lists.push_back(list);
    sub.girl_origin.push_back(g);
  }
  for (const auto& [b, list] : pared.boys) {
    sub.boys.left.push_back(instance.boy_name(b));
    sub.boys.lists.push_back(list);
    sub.boy_origin.push_back(b);
  }
  return sub;
}

std::variant<SmpInstance, Infeasible> preprocess_refusals(const RawInstance& raw) {
  const auto& in = raw.instance;
  auto violations = validate(in);
  const std::set<std::string> refusers(raw.refusers.begin(), raw.refusers.end());
  const std::set<std::string> girls(in.girls.begin(), in.girls.end());
  const std::set<std::string> boys(in.boys.begin(), in.boys.end());
  for (const auto& r : refusers) {
    if (!girls.count(r) && !boys.count(r)) violations.push_back("unknown refuser " + r);
  }
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw std::invalid_argument(msg.str());
  }

  NamedInstance out;
  auto keep = [&](const std::vector<std::string>& list) {
    std::vector<std::string> kept;
    for (const auto& x : list) {
      if (!refusers.count(x)) kept.push_back(x);
    }
    return kept;
  };
  for (std::size_t g = 0; g < in.girls.size(); ++g) {
    if (refusers.count(in.girls[g])) continue;
    auto kept = keep(in.girl_lists[g]);
    // A list emptied by deletion is unmeetable, not a wildcard.
    if (!in.girl_lists[g].empty() && kept.empty()) return Infeasible{in.girls[g]};
    out.girls.push_back(in.girls[g]);
    out.girl_lists.push_back(std::move(kept));
  }
  for (std::size_t b = 0; b < in.boys.size(); ++b) {
    if (refusers.count(in.boys[b])) continue;
    auto kept = keep(in.boy_lists[b]);
    if (!in.boy_lists[b].empty() && kept.empty()) return Infeasible{in.boys[b]};
    out.boys.push_back(in.boys[b]);
    out.boy_lists.push_back(std::move(kept));
  }
  return SmpInstance(out);
}

std::variant<CmpInstance, NotBaby> baby_to_cmp(const SmpInstance& instance) {
  for (Index g = 0; g < instance.girl_count(); ++g) {
    if (!instance.girl_listed(g)) return NotBaby{"girl " + instance.girl_name(g) + " has no list"};
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    if (!instance.boy_listed(b)) return NotBaby{"boy " + instance.boy_name(b) + " has no list"};
  }
  if (instance.girl_count() != instance.boy_count()) {
    return NotBaby{"girl count " + std::to_string(instance.girl_count()) +
                   " differs from boy count " + std::to_string(instance.boy_count())};
  }
  for (Index g = 0; g < instance.girl_count(); ++g) {
    for (Index b : instance.girl_list(g)) {
      if (!instance.boy_accepts(b, g)) {
        return NotBaby{instance.boy_name(b) + " is on the list of " + instance.girl_name(g) +
                       " but not vice versa"};
      }
    }
  }
  for (Index b = 0; b < instance.boy_count(); ++b) {
    for (Index g : instance.boy_list(b)) {
      if (!instance.girl_accepts(g, b)) {
        return NotBaby{instance.girl_name(g) + " is on the list of " + instance.boy_name(b) +
                       " but not vice versa"};
      }
    }
  }
  CmpInstance cmp;
  cmp.left = instance.girls();
  cmp.right = instance.boys();
  for (Index g = 0; g < instance.girl_count(); ++g) cmp.lists.push_back(instance.girl_list(g));
  return cmp;
}

SmpInstance cmp_to_smp(const CmpInstance& cmp) {
  auto violations = validate(cmp);
  if (!violations.empty()) throw std::invalid_argument("invalid CMP instance: " + violations.front());
  return SmpInstance(cmp.left, cmp.right, cmp.lists,
                     std::vector<IndexList>(cmp.right.size()));
}

std::vector<std::pair<std::string, std::string>> assignment_names(
    const SmpInstance& instance, const Assignment& assignment) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(assignment.pairs.size());
  for (const auto& p : assignment.pairs) {
    out.emplace_back(instance.girl_name(p.girl), instance.boy_name(p.boy));
  }
  return out;
}

}  // namespace smp
