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

// Seeded instance generators. Every generator re-checks the structural
// constraints of what it built before returning it.
//
// Randomness: std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(tag)),
// where `tag` is a fixed constant per generator. Bounded integers use
// rejection sampling on the raw 64-bit output and shuffles are Fisher-Yates
// from the back, so the streams do not depend on the standard library's
// distribution implementations.

#ifndef SMP_GENERATORS_HPP_
#define SMP_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "smp/instance.hpp"

namespace smp {

struct Seed {
  std::uint64_t value = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  Rng(Seed seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- round robin tournament -------------------------------------------------

// sessions[s] lists the matches (home, away) of session s.
using Schedule = std::vector<std::vector<std::pair<Index, Index>>>;

// Circle method for 2n teams: team 0 stays fixed, the others rotate.
Schedule round_robin_schedule(std::size_t n);

// Each team plays once per session and every pair meets exactly once.
bool is_round_robin(const Schedule& schedule, std::size_t teams);

struct Tournament {
  Schedule schedule;
  std::vector<std::vector<Index>> winners;  // per session, ascending
  CmpInstance cmp;                          // sessions -> winning teams
};

Tournament gen_tournament_full(std::size_t n, Seed seed);
CmpInstance gen_tournament(std::size_t n, Seed seed);

// ---- rooks ------------------------------------------------------------------

using Board = std::vector<std::vector<bool>>;

// 2n x 2n board with exactly n rooks in every row and every column.
Board gen_rooks_board(std::size_t n, Seed seed);
bool has_n_rooks_per_line(const Board& board, std::size_t n);
// Rows -> columns holding a rook.
CmpInstance rooks_cmp(const Board& board);
CmpInstance gen_rooks(std::size_t n, Seed seed);

// ---- chessboard -------------------------------------------------------------

struct Chessboard {
  std::size_t n = 0;
  std::vector<std::vector<int>> row_player;     // 4n x 4n entries in {-1, 0, +1}
  std::vector<std::vector<int>> column_player;  // 4n x 4n entries in {-1, 0, +1}
  std::vector<std::vector<int>> cell_sum;       // row_player + column_player
  SmpInstance instance;                         // rows = girls, columns = boys
};

// Checks the players' rules: >= 3n non-zero lines, >= 3n +1 entries in each,
// every other entry of a non-zero line -1, zero lines all 0, and at most n of
// a player's -1 entries in any crossing line.
bool chessboard_rules_hold(const Chessboard& board);

inline constexpr int kChessboardRetryLimit = 1000;

// Throws GeneratorError if no balanced placement is found within
// kChessboardRetryLimit attempts.
Chessboard gen_chessboard(std::size_t n, Seed seed);

// ---- workers and tasks ------------------------------------------------------

struct AssignmentProblem {
  std::vector<std::string> workers;
  std::vector<std::string> tasks;
  std::vector<std::string> paid_workers;
  std::vector<std::string> mandatory_tasks;
  std::vector<std::pair<std::string, std::string>> capability;  // (worker, task)
};

// Workers become girls and tasks boys. Paid workers list the tasks they can
// do, mandatory tasks list the workers able to do them, everyone else is a
// wildcard. A paid worker or mandatory task with no capable partner makes the
// problem infeasible.
std::variant<SmpInstance, Infeasible> assignment_instance(const AssignmentProblem& problem);

struct AssignmentShape {
  std::size_t workers = 0;
  std::size_t tasks = 0;
  std::size_t paid = 0;
  std::size_t mandatory = 0;
  double capability_density = 0.3;
};

// Random capability relation; each paid worker and mandatory task gets at
// least one capable partner.
AssignmentProblem random_assignment_problem(const AssignmentShape& shape, Seed seed);

SmpInstance gen_assignment(const AssignmentShape& shape, Seed seed);

// ---- random instances for testing and benchmarking --------------------------

struct RandomShape {
  std::size_t girls = 0;
  std::size_t boys = 0;
  double girl_list_probability = 0.5;  // chance that a girl makes a list
  double boy_list_probability = 0.5;
  std::size_t max_list = 0;            // list length is uniform in [1, max_list]
};

SmpInstance random_instance(const RandomShape& shape, Seed seed);

// Solvable by construction: a hidden pairing of min(|G|,|B|) couples is
// planted, every listed member's list contains its planted partner, and
// listed members without a partner do not occur.
SmpInstance planted_instance(std::size_t size, double list_probability, std::size_t mean_list,
                             Seed seed);

}  // namespace smp

#endif  // SMP_GENERATORS_HPP_
