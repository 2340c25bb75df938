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

#include "smp/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace smp {
namespace {

// Stream tags, one per generator.
constexpr std::uint64_t kTournamentStream = 0x746f75726e616d74;  // "tournamt"
constexpr std::uint64_t kRooksStream = 0x726f6f6b73000000;       // "rooks"
constexpr std::uint64_t kChessboardStream = 0x6368657373000000;  // "chess"
constexpr std::uint64_t kAssignmentStream = 0x61737369676e0000;  // "assign"
constexpr std::uint64_t kRandomStream = 0x72616e646f6d0000;      // "random"
constexpr std::uint64_t kPlantedStream = 0x706c616e74000000;     // "plant"

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

double unit(Rng& rng) { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; }

// `count` distinct values from [0, universe), ascending.
IndexList sample(Rng& rng, std::size_t universe, std::size_t count) {
  IndexList all(universe);
  std::iota(all.begin(), all.end(), 0);
  // partial Fisher-Yates from the front
  for (std::size_t i = 0; i < count; ++i) std::swap(all[i], all[i + rng.below(universe - i)]);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(Seed seed, std::uint64_t stream) : engine_(splitmix64(seed.value ^ splitmix64(stream))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the low (2^64 mod bound) values so the remainder is uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

// ---- round robin tournament -------------------------------------------------

Schedule round_robin_schedule(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tournament needs n >= 1");
  const std::size_t teams = 2 * n;
  const std::size_t rotating = teams - 1;
  Schedule schedule(rotating);
  std::vector<Index> order(teams);
  for (std::size_t r = 0; r < rotating; ++r) {
    order[0] = 0;
    for (std::size_t j = 0; j < rotating; ++j) order[j + 1] = 1 + (j + r) % rotating;
    for (std::size_t i = 0; i < n; ++i) schedule[r].emplace_back(order[i], order[teams - 1 - i]);
  }
  return schedule;
}

bool is_round_robin(const Schedule& schedule, std::size_t teams) {
  if (teams < 2 || teams % 2 != 0 || schedule.size() != teams - 1) return false;
  std::set<std::pair<Index, Index>> met;
  for (const auto& session : schedule) {
    if (session.size() != teams / 2) return false;
    std::vector<bool> played(teams, false);
    for (auto [a, b] : session) {
      if (a >= teams || b >= teams || a == b || played[a] || played[b]) return false;
      played[a] = played[b] = true;
      if (!met.insert(std::minmax(a, b)).second) return false;
    }
  }
  return met.size() == teams * (teams - 1) / 2;
}

Tournament gen_tournament_full(std::size_t n, Seed seed) {
  Tournament t;
  t.schedule = round_robin_schedule(n);
  if (!is_round_robin(t.schedule, 2 * n)) throw GeneratorError("circle method produced a bad schedule");
  Rng rng(seed, kTournamentStream);
  t.cmp.left = numbered("s", t.schedule.size());
  t.cmp.right = numbered("t", 2 * n);
  for (const auto& session : t.schedule) {
    std::vector<Index> winners;
    for (auto [home, away] : session) winners.push_back(rng.coin() ? home : away);
    std::sort(winners.begin(), winners.end());
    if (winners.size() != n) throw GeneratorError("session without n winners");
    t.winners.push_back(winners);
    t.cmp.lists.push_back(winners);
  }
  return t;
}

CmpInstance gen_tournament(std::size_t n, Seed seed) { return gen_tournament_full(n, seed).cmp; }

// ---- rooks ------------------------------------------------------------------

Board gen_rooks_board(std::size_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("rooks board needs n >= 1");
  const std::size_t size = 2 * n;
  Rng rng(seed, kRooksStream);
  std::vector<Index> row_perm(size), col_perm(size);
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  rng.shuffle(row_perm);
  rng.shuffle(col_perm);
  Board board(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      board[row_perm[i]][col_perm[(i + shift) % size]] = true;
    }
  }
  if (!has_n_rooks_per_line(board, n)) throw GeneratorError("rook placement violates line counts");
  return board;
}

bool has_n_rooks_per_line(const Board& board, std::size_t n) {
  const std::size_t size = board.size();
  if (size != 2 * n) return false;
  std::vector<std::size_t> per_column(size, 0);
  for (const auto& row : board) {
    if (row.size() != size) return false;
    std::size_t count = 0;
    for (std::size_t j = 0; j < size; ++j) {
      if (row[j]) {
        ++count;
        ++per_column[j];
      }
    }
    if (count != n) return false;
  }
  return std::all_of(per_column.begin(), per_column.end(), [n](std::size_t c) { return c == n; });
}

CmpInstance rooks_cmp(const Board& board) {
  CmpInstance cmp;
  cmp.left = numbered("r", board.size());
  cmp.right = numbered("c", board.size());
  for (const auto& row : board) {
    IndexList cols;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j]) cols.push_back(j);
    }
    cmp.lists.push_back(cols);
  }
  return cmp;
}

CmpInstance gen_rooks(std::size_t n, Seed seed) { return rooks_cmp(gen_rooks_board(n, seed)); }

// ---- chessboard -------------------------------------------------------------

namespace {

// One player's entries, oriented so that lines are rows. Returns false on a
// dead end (not enough crossing lines with spare -1 capacity).
bool place_player(std::size_t n, Rng& rng, std::vector<std::vector<int>>& lines) {
  const std::size_t size = 4 * n;
  lines.assign(size, std::vector<int>(size, 0));
  const std::size_t chosen_count = rng.between(3 * n, 4 * n);
  std::vector<std::size_t> crossing_negatives(size, 0);
  for (Index line : sample(rng, size, chosen_count)) {
    const std::size_t negatives = rng.between(0, n);
    IndexList open;
    for (Index j = 0; j < size; ++j) {
      if (crossing_negatives[j] < n) open.push_back(j);
    }
    if (open.size() < negatives) return false;
    std::fill(lines[line].begin(), lines[line].end(), 1);
    for (Index k : sample(rng, open.size(), negatives)) {
      lines[line][open[k]] = -1;
      ++crossing_negatives[open[k]];
    }
  }
  return true;
}

bool line_rules_hold(std::size_t n, const std::vector<std::vector<int>>& lines) {
  const std::size_t size = 4 * n;
  if (lines.size() != size) return false;
  std::size_t nonzero = 0;
  std::vector<std::size_t> crossing_negatives(size, 0);
  for (const auto& line : lines) {
    if (line.size() != size) return false;
    const auto plus = static_cast<std::size_t>(std::count(line.begin(), line.end(), 1));
    const auto minus = static_cast<std::size_t>(std::count(line.begin(), line.end(), -1));
    if (plus == 0 && minus == 0) continue;
    ++nonzero;
    if (plus + minus != size || plus < 3 * n) return false;
    for (std::size_t j = 0; j < size; ++j) {
      if (line[j] == -1) ++crossing_negatives[j];
    }
  }
  if (nonzero < 3 * n) return false;
  return std::all_of(crossing_negatives.begin(), crossing_negatives.end(),
                     [n](std::size_t c) { return c <= n; });
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<int>> t(m.empty() ? 0 : m[0].size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace

bool chessboard_rules_hold(const Chessboard& board) {
  return line_rules_hold(board.n, board.row_player) &&
         line_rules_hold(board.n, transpose(board.column_player));
}

Chessboard gen_chessboard(std::size_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("chessboard needs n >= 1");
  const std::size_t size = 4 * n;
  Rng rng(seed, kChessboardStream);
  Chessboard board;
  board.n = n;
  int attempts = 0;
  auto place = [&](std::vector<std::vector<int>>& lines) {
    while (!place_player(n, rng, lines)) {
      if (++attempts >= kChessboardRetryLimit) {
        throw GeneratorError("no balanced chessboard placement within retry limit");
      }
    }
  };
  place(board.row_player);
  std::vector<std::vector<int>> columns;
  place(columns);
  board.column_player = transpose(columns);

  board.cell_sum.assign(size, std::vector<int>(size, 0));
  std::vector<IndexList> girl_lists(size), boy_lists(size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      board.cell_sum[i][j] = board.row_player[i][j] + board.column_player[i][j];
      if (board.row_player[i][j] == 1) girl_lists[i].push_back(j);
    }
  }
  for (Index j = 0; j < size; ++j) {
    for (Index i = 0; i < size; ++i) {
      if (board.column_player[i][j] == 1) boy_lists[j].push_back(i);
    }
  }
  board.instance = SmpInstance(numbered("r", size), numbered("c", size), std::move(girl_lists),
                               std::move(boy_lists));
  if (!chessboard_rules_hold(board)) throw GeneratorError("chessboard placement violates rules");
  return board;
}

// ---- workers and tasks ------------------------------------------------------

std::variant<SmpInstance, Infeasible> assignment_instance(const AssignmentProblem& problem) {
  std::map<std::string, Index> worker_index, task_index;
  for (Index i = 0; i < problem.workers.size(); ++i) worker_index.emplace(problem.workers[i], i);
  for (Index i = 0; i < problem.tasks.size(); ++i) task_index.emplace(problem.tasks[i], i);
  if (worker_index.size() != problem.workers.size() || task_index.size() != problem.tasks.size()) {
    throw std::invalid_argument("duplicate worker or task name");
  }
  auto lookup = [](const std::map<std::string, Index>& index, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw std::invalid_argument("unknown name " + name);
    return it->second;
  };
  std::vector<bool> paid(problem.workers.size(), false), mandatory(problem.tasks.size(), false);
  for (const auto& w : problem.paid_workers) paid[lookup(worker_index, w)] = true;
  for (const auto& t : problem.mandatory_tasks) mandatory[lookup(task_index, t)] = true;

  std::vector<std::set<Index>> can_do(problem.workers.size()), done_by(problem.tasks.size());
  for (const auto& [w, t] : problem.capability) {
    const Index wi = lookup(worker_index, w);
    const Index ti = lookup(task_index, t);
    can_do[wi].insert(ti);
    done_by[ti].insert(wi);
  }
  std::vector<IndexList> girl_lists(problem.workers.size()), boy_lists(problem.tasks.size());
  for (Index w = 0; w < problem.workers.size(); ++w) {
    if (!paid[w]) continue;
    if (can_do[w].empty()) return Infeasible{problem.workers[w]};
    girl_lists[w].assign(can_do[w].begin(), can_do[w].end());
  }
  for (Index t = 0; t < problem.tasks.size(); ++t) {
    if (!mandatory[t]) continue;
    if (done_by[t].empty()) return Infeasible{problem.tasks[t]};
    boy_lists[t].assign(done_by[t].begin(), done_by[t].end());
  }
  return SmpInstance(problem.workers, problem.tasks, std::move(girl_lists), std::move(boy_lists));
}

AssignmentProblem random_assignment_problem(const AssignmentShape& shape, Seed seed) {
  if (shape.paid > shape.workers || shape.mandatory > shape.tasks) {
    throw std::invalid_argument("more paid workers or mandatory tasks than exist");
  }
  if ((shape.paid > 0 && shape.tasks == 0) || (shape.mandatory > 0 && shape.workers == 0)) {
    throw std::invalid_argument("paid workers need tasks and mandatory tasks need workers");
  }
  Rng rng(seed, kAssignmentStream);
  AssignmentProblem p;
  p.workers = numbered("w", shape.workers);
  p.tasks = numbered("t", shape.tasks);
  const IndexList paid = sample(rng, shape.workers, shape.paid);
  const IndexList mandatory = sample(rng, shape.tasks, shape.mandatory);
  std::vector<std::vector<bool>> capable(shape.workers, std::vector<bool>(shape.tasks, false));
  for (Index w = 0; w < shape.workers; ++w) {
    for (Index t = 0; t < shape.tasks; ++t) capable[w][t] = unit(rng) < shape.capability_density;
  }
  for (Index w : paid) {
    if (std::none_of(capable[w].begin(), capable[w].end(), [](bool c) { return c; })) {
      capable[w][rng.below(shape.tasks)] = true;
    }
  }
  for (Index t : mandatory) {
    bool any = false;
    for (Index w = 0; w < shape.workers; ++w) any = any || capable[w][t];
    if (!any) capable[rng.below(shape.workers)][t] = true;
  }
  for (Index w : paid) p.paid_workers.push_back(p.workers[w]);
  for (Index t : mandatory) p.mandatory_tasks.push_back(p.tasks[t]);
  for (Index w = 0; w < shape.workers; ++w) {
    for (Index t = 0; t < shape.tasks; ++t) {
      if (capable[w][t]) p.capability.emplace_back(p.workers[w], p.tasks[t]);
    }
  }
  return p;
}

SmpInstance gen_assignment(const AssignmentShape& shape, Seed seed) {
  auto result = assignment_instance(random_assignment_problem(shape, seed));
  if (auto* inf = std::get_if<Infeasible>(&result)) {
    throw GeneratorError("generated assignment problem is infeasible at " + inf->member);
  }
  return std::get<SmpInstance>(std::move(result));
}

// ---- random instances -------------------------------------------------------

SmpInstance random_instance(const RandomShape& shape, Seed seed) {
  Rng rng(seed, kRandomStream);
  std::vector<IndexList> girl_lists(shape.girls), boy_lists(shape.boys);
  auto fill = [&](std::vector<IndexList>& lists, std::size_t universe, double p) {
    for (auto& list : lists) {
      if (universe == 0 || shape.max_list == 0 || unit(rng) >= p) continue;
      const std::size_t len = rng.between(1, std::min(shape.max_list, universe));
      list = sample(rng, universe, len);
      rng.shuffle(list);
    }
  };
  fill(girl_lists, shape.boys, shape.girl_list_probability);
  fill(boy_lists, shape.girls, shape.boy_list_probability);
  return SmpInstance(numbered("g", shape.girls), numbered("b", shape.boys), std::move(girl_lists),
                     std::move(boy_lists));
}

SmpInstance planted_instance(std::size_t size, double list_probability, std::size_t mean_list,
                             Seed seed) {
  Rng rng(seed, kPlantedStream);
  std::vector<Index> partner(size);
  std::iota(partner.begin(), partner.end(), 0);
  rng.shuffle(partner);
  std::vector<Index> partner_of_boy(size);
  for (Index g = 0; g < size; ++g) partner_of_boy[partner[g]] = g;

  auto make_list = [&](Index planted) {
    std::set<Index> picked{planted};
    const std::size_t extra = mean_list > 1 ? rng.below(2 * (mean_list - 1) + 1) : 0;
    for (std::size_t k = 0; k < extra && picked.size() < size; ++k) picked.insert(rng.below(size));
    IndexList list(picked.begin(), picked.end());
    rng.shuffle(list);
    return list;
  };
  std::vector<IndexList> girl_lists(size), boy_lists(size);
  for (Index g = 0; g < size; ++g) {
    if (unit(rng) < list_probability) girl_lists[g] = make_list(partner[g]);
  }
  for (Index b = 0; b < size; ++b) {
    if (unit(rng) < list_probability) boy_lists[b] = make_list(partner_of_boy[b]);
  }
  return SmpInstance(numbered("g", size), numbered("b", size), std::move(girl_lists),
                     std::move(boy_lists));
}

}  // namespace smp
