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

// Exponential-time ground truth: Hall's condition by subset enumeration and
// a backtracking search over injective partial functions. These do not share
// code with the matching-based solvers and are used to check them.

#ifndef SMP_HALL_ORACLE_HPP_
#define SMP_HALL_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "smp/instance.hpp"

namespace smp {

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kHallSubsetLimit = 20;
inline constexpr std::size_t kBacktrackLimit = 8;

// A set of listed members on one side whose pared lists jointly name fewer
// partners than there are members. For CMP use, `side` is kGirls and the
// members index the CMP's left set.
struct HallViolator {
  Side side = Side::kGirls;
  IndexList members;  // ascending
  std::size_t union_size = 0;

  bool operator==(const HallViolator&) const = default;
};

// First violator in (size, lexicographic) order, or none when Hall's
// condition holds. Throws SizeLimitError above kHallSubsetLimit left members.
std::optional<HallViolator> hall_condition_cmp(const CmpInstance& cmp);

// Both Hall conditions over pared lists: girls' side first, then boys'.
// Throws SizeLimitError if |G_L| or |B_L| exceeds kHallSubsetLimit.
std::optional<HallViolator> hall_bicriteria(const SmpInstance& instance);

// Lexicographically first solution by exhaustive search, or none.
// Throws SizeLimitError above kBacktrackLimit members on either side.
std::optional<Assignment> oracle_solve(const SmpInstance& instance);

// Recomputes the pared-list union of `violator` from the instance alone and
// checks that it is a genuine violator (distinct listed members, union smaller
// than the subset, union_size as claimed).
bool violator_holds(const SmpInstance& instance, const HallViolator& violator);

// Checks Problem-1 validity of `assignment` directly from the definition.
bool assignment_solves(const SmpInstance& instance, const Assignment& assignment);

}  // namespace smp

#endif  // SMP_HALL_ORACLE_HPP_
