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

#include <random>

#include "doctest.h"
#include "smp/bipartite.hpp"
#include "smp/generators.hpp"
#include "smp/hall_oracle.hpp"
#include "support.hpp"

using namespace smp;
using smp::testing::for_each_3x3;
using smp::testing::instance_i1;
using smp::testing::instance_i3;
using smp::testing::make;
using smp::testing::names_of;
using smp::testing::two_girls_one_boy;

using NamePairs = std::vector<std::pair<std::string, std::string>>;

TEST_CASE("hall_condition_cmp") {
  CmpInstance shared{{"1", "2"}, {"a"}, {{0}, {0}}};
  auto v = hall_condition_cmp(shared);
  REQUIRE(v.has_value());
  CHECK(v->members == IndexList{0, 1});
  CHECK(v->union_size == 1);

  CmpInstance disjoint{{"1", "2", "3"}, {"a", "b", "c", "d"}, {{0}, {1, 2}, {3}}};
  CHECK_FALSE(hall_condition_cmp(disjoint).has_value());

  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CHECK_FALSE(hall_condition_cmp(gen_tournament(n, Seed{seed})).has_value());
    }
  }
}

TEST_CASE("hall_condition_cmp reports the smallest violator first") {
  // {0} alone has an empty list, which beats the size-2 violator {1,2}.
  CmpInstance c{{"x", "y", "z"}, {"a", "b"}, {{}, {0}, {0}}};
  auto v = hall_condition_cmp(c);
  REQUIRE(v.has_value());
  CHECK(v->members == IndexList{0});
  CHECK(v->union_size == 0);
}

TEST_CASE("hall_condition_cmp agrees with matching coverage") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t l = 1 + rng() % 6, r = 1 + rng() % 6;
    CmpInstance c;
    for (std::size_t i = 0; i < l; ++i) c.left.push_back("l" + std::to_string(i));
    for (std::size_t i = 0; i < r; ++i) c.right.push_back("r" + std::to_string(i));
    for (std::size_t i = 0; i < l; ++i) {
      IndexList list;
      for (Index j = 0; j < r; ++j) {
        if (rng() % 3 == 0) list.push_back(j);
      }
      if (list.empty()) list.push_back(rng() % r);
      c.lists.push_back(list);
    }
    BipartiteGraph g(l, r, c.lists);
    CHECK(hall_condition_cmp(c).has_value() == (max_matching(g).size() < l));
  }
}

TEST_CASE("hall_bicriteria examples") {
  CHECK_FALSE(hall_bicriteria(instance_i1()).has_value());
  CHECK_FALSE(hall_bicriteria(instance_i3()).has_value());

  auto v = hall_bicriteria(two_girls_one_boy());
  REQUIRE(v.has_value());
  CHECK(v->side == Side::kGirls);
  CHECK(v->members == IndexList{0, 1});
  CHECK(v->union_size == 1);
}

TEST_CASE("hall_bicriteria checks the boys' side with pared lists") {
  // b1's list {g1} is pared to nothing: g1 lists only b2.
  auto s = make({"g1", "g2"}, {"b1", "b2"}, {{"g1", {"b2"}}}, {{"b1", {"g1"}}});
  auto v = hall_bicriteria(s);
  REQUIRE(v.has_value());
  CHECK(v->side == Side::kBoys);
  CHECK(v->members == IndexList{0});
  CHECK(v->union_size == 0);
  CHECK(violator_holds(s, *v));
}

TEST_CASE("oracle_solve examples") {
  auto a = oracle_solve(instance_i1());
  REQUIRE(a.has_value());
  CHECK(names_of(instance_i1(), *a) == NamePairs{{"g1", "b2"}, {"g2", "b1"}});

  CHECK_FALSE(oracle_solve(two_girls_one_boy()).has_value());

  auto empty = make({}, {}, {}, {});
  auto e = oracle_solve(empty);
  REQUIRE(e.has_value());
  CHECK(e->pairs.empty());
}

TEST_CASE("size guards") {
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("x" + std::to_string(i));
  CmpInstance big{names, {"a"}, std::vector<IndexList>(21, IndexList{0})};
  CHECK_THROWS_AS(hall_condition_cmp(big), SizeLimitError);

  auto nine = random_instance({9, 2, 0.5, 0.5, 2}, Seed{1});
  CHECK_THROWS_AS(oracle_solve(nine), SizeLimitError);
}

TEST_CASE("bi-criteria matches exhaustive search on every 3x3 instance") {
  std::size_t solvable = 0, total = 0, bad_certs = 0, bad_assignments = 0, disagreements = 0;
  for_each_3x3([&](const SmpInstance& s) {
    ++total;
    auto v = hall_bicriteria(s);
    auto a = oracle_solve(s);
    if (v.has_value() == a.has_value()) ++disagreements;
    if (v && !violator_holds(s, *v)) ++bad_certs;
    if (a) {
      ++solvable;
      if (!assignment_solves(s, *a)) ++bad_assignments;
    }
  });
  CHECK(total == 262144);
  CHECK(disagreements == 0);
  CHECK(bad_certs == 0);
  CHECK(bad_assignments == 0);
  CHECK(solvable > 0);
  CHECK(solvable < total);
}

TEST_CASE("assignment_solves rejects broken assignments") {
  auto s = instance_i1();
  CHECK(assignment_solves(s, Assignment{{{0, 1}, {1, 0}}}));
  CHECK_FALSE(assignment_solves(s, Assignment{{{0, 0}, {1, 1}}}));  // g1 off b1's list
  CHECK_FALSE(assignment_solves(s, Assignment{{{0, 1}}}));          // b1 uncovered
  CHECK_FALSE(assignment_solves(s, Assignment{{{0, 1}, {1, 1}}}));  // not injective
}
