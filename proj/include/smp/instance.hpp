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

#ifndef SMP_INSTANCE_HPP_
#define SMP_INSTANCE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace smp {

using Index = std::size_t;
using IndexList = std::vector<Index>;

enum class Side { kGirls, kBoys };

const char* side_name(Side side);

// Raised when an operation is called outside its precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// String-level view of an instance, as read from or written to a file.
// Lists are aligned with `girls` / `boys`; an empty list is a wildcard.
struct NamedInstance {
  std::vector<std::string> girls;
  std::vector<std::string> boys;
  std::vector<std::vector<std::string>> girl_lists;
  std::vector<std::vector<std::string>> boy_lists;

  bool operator==(const NamedInstance&) const = default;
};

// A named instance plus the people who refuse to be married at all.
struct RawInstance {
  NamedInstance instance;
  std::vector<std::string> refusers;

  bool operator==(const RawInstance&) const = default;
};

// Returns every invariant violation of `instance`; empty means well formed.
std::vector<std::string> validate(const NamedInstance& instance);

// Symmetric marriage problem instance over dense indices. Immutable once
// built. Lists keep input order; membership queries use sorted copies.
class SmpInstance {
 public:
  SmpInstance() = default;

  // Throws std::invalid_argument listing the violations if `named` is not
  // well formed.
  explicit SmpInstance(const NamedInstance& named);

  // Index-level constructor. List entries must be in range and unique.
  SmpInstance(std::vector<std::string> girls, std::vector<std::string> boys,
              std::vector<IndexList> girl_lists,
              std::vector<IndexList> boy_lists);

  std::size_t girl_count() const { return girls_.size(); }
  std::size_t boy_count() const { return boys_.size(); }
  const std::vector<std::string>& girls() const { return girls_; }
  const std::vector<std::string>& boys() const { return boys_; }
  const std::string& girl_name(Index g) const { return girls_.at(g); }
  const std::string& boy_name(Index b) const { return boys_.at(b); }

  const IndexList& girl_list(Index g) const { return girl_lists_.at(g); }
  const IndexList& boy_list(Index b) const { return boy_lists_.at(b); }
  bool girl_listed(Index g) const { return !girl_lists_.at(g).empty(); }
  bool boy_listed(Index b) const { return !boy_lists_.at(b).empty(); }

  // b ∈ B_g and g ∈ G_b respectively.
  bool girl_accepts(Index g, Index b) const;
  bool boy_accepts(Index b, Index g) const;

  std::optional<Index> find_girl(const std::string& name) const;
  std::optional<Index> find_boy(const std::string& name) const;

  NamedInstance to_named() const;

  bool operator==(const SmpInstance& other) const {
    return girls_ == other.girls_ && boys_ == other.boys_ &&
           girl_lists_ == other.girl_lists_ && boy_lists_ == other.boy_lists_;
  }

 private:
  void index_names();

  std::vector<std::string> girls_;
  std::vector<std::string> boys_;
  std::vector<IndexList> girl_lists_;
  std::vector<IndexList> boy_lists_;
  std::vector<IndexList> girl_sorted_;
  std::vector<IndexList> boy_sorted_;
  std::map<std::string, Index> girl_index_;
  std::map<std::string, Index> boy_index_;
};

// One-sided (classical) marriage problem: every left member must receive a
// distinct right member from its list. Instances derived from an SMP may
// carry empty lists, which makes them trivially unsolvable.
struct CmpInstance {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<IndexList> lists;  // aligned with `left`, entries index `right`

  std::optional<Index> first_empty_list() const;
  bool trivially_unsolvable() const { return first_empty_list().has_value(); }

  bool operator==(const CmpInstance&) const = default;
};

// Violations of the CmpInstance invariants (range, duplicates, nonempty).
std::vector<std::string> validate(const CmpInstance& cmp);

struct Pairing {
  Index girl;
  Index boy;

  auto operator<=>(const Pairing&) const = default;
};

// Injective partial function from girls to boys, sorted by girl.
struct Assignment {
  std::vector<Pairing> pairs;

  bool operator==(const Assignment&) const = default;
};

struct ListedSets {
  IndexList girls;  // G_L in input order
  IndexList boys;   // B_L in input order
};

ListedSets listed_sets(const SmpInstance& instance);

// Throws ContractError if either member has no list.
bool is_list_compatible(const SmpInstance& instance, Index g, Index b);

// Pared lists B*_g (g ∈ G_L) and G*_b (b ∈ B_L), in original list order.
struct ParedLists {
  std::map<Index, IndexList> girls;
  std::map<Index, IndexList> boys;
};

ParedLists pare_lists(const SmpInstance& instance);

// The two classical problems C_G = (G_L, B, {B*_g}) and C_B = (B_L, G, {G*_b}).
struct CmpSubproblems {
  CmpInstance girls;
  CmpInstance boys;
  IndexList girl_origin;  // left index of `girls` -> girl index
  IndexList boy_origin;   // left index of `boys` -> boy index
};

CmpSubproblems cmp_subproblems(const SmpInstance& instance);

// Refusal preprocessing empties the list of `member`.
struct Infeasible {
  std::string member;

  bool operator==(const Infeasible&) const = default;
};

std::variant<SmpInstance, Infeasible> preprocess_refusals(
    const RawInstance& raw);

struct NotBaby {
  std::string reason;
};

std::variant<CmpInstance, NotBaby> baby_to_cmp(const SmpInstance& instance);

SmpInstance cmp_to_smp(const CmpInstance& cmp);

std::vector<std::pair<std::string, std::string>> assignment_names(
    const SmpInstance& instance, const Assignment& assignment);

}  // namespace smp

#endif  // SMP_INSTANCE_HPP_
