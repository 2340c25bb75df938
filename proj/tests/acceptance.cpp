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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "smp/bipartite.hpp"
#include "smp/cli.hpp"
#include "smp/generators.hpp"
#include "smp/hall_oracle.hpp"
#include "smp/io.hpp"
#include "smp/star_solver.hpp"
#include "smp/weighted.hpp"
#include "support.hpp"

using namespace smp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("[%s] AC%d %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool is_solved(const SolveResult& r) { return std::holds_alternative<Assignment>(r); }

// Pared-list union of a violator, recomputed from the lists alone.
std::size_t pared_union(const SmpInstance& s, const HallViolator& v) {
  std::set<Index> out;
  for (Index m : v.members) {
    if (v.side == Side::kGirls) {
      for (Index b : s.girl_list(m)) {
        if (!s.boy_listed(b) || s.boy_accepts(b, m)) out.insert(b);
      }
    } else {
      for (Index g : s.boy_list(m)) {
        if (!s.girl_listed(g) || s.girl_accepts(g, m)) out.insert(g);
      }
    }
  }
  return out.size();
}

bool certificate_ok(const SmpInstance& s, const HallViolator& v) {
  std::set<Index> members(v.members.begin(), v.members.end());
  if (members.size() != v.members.size() || members.empty()) return false;
  for (Index m : v.members) {
    const bool listed = v.side == Side::kGirls ? m < s.girl_count() && s.girl_listed(m)
                                               : m < s.boy_count() && s.boy_listed(m);
    if (!listed) return false;
  }
  const std::size_t u = pared_union(s, v);
  return u == v.union_size && u < v.members.size();
}

bool covers(const CmpInstance& c) {
  BipartiteGraph g(c.left.size(), c.right.size(), c.lists);
  return max_matching(g).size() == c.left.size();
}

bool sub_cmps_solvable(const SmpInstance& s) {
  auto sub = cmp_subproblems(s);
  return covers(sub.girls) && covers(sub.boys);
}

// Passes the assignment through the same check `smp verify` applies to a
// result file.
bool verifies(const SmpInstance& s, const Assignment& a) {
  ResultFile r;
  r.status = ResultStatus::kSolved;
  r.assignment = assignment_names(s, a);
  RawInstance raw{s.to_named(), {}};
  return cli::verify_result(parse_instance(serialize_instance(raw)),
                            parse_result(serialize_result(r)))
      .valid;
}

struct CorpusStats {
  std::size_t instances = 0;
  std::size_t random_instances = 0;
  std::size_t solvable = 0;
  std::size_t ac1_disagreements = 0;
  std::size_t ac2_disagreements = 0;
  std::size_t ac3_disagreements = 0;
  std::size_t weight_bound_violations = 0;
  std::size_t repair_failures = 0;
  std::size_t repaired_matchings = 0;
  std::size_t total_initial_mismatches = 0;
};

void check_instance(const SmpInstance& s, CorpusStats& st, std::mt19937_64& rng) {
  ++st.instances;
  const bool oracle = oracle_solve(s).has_value();
  const auto star = solve(s);
  const auto via_sub = solve_via_subproblems(s);
  const bool subs = sub_cmps_solvable(s);
  if (is_solved(star) != oracle || subs != oracle || is_solved(via_sub) != oracle) {
    ++st.ac1_disagreements;
  }
  if (is_solved(star) && !assignment_solves(s, std::get<Assignment>(star))) ++st.ac1_disagreements;
  if (!is_solved(star) && !certificate_ok(s, std::get<Unsolvable>(star).violator)) {
    ++st.ac1_disagreements;
  }

  if (hall_bicriteria(s).has_value() == oracle) ++st.ac2_disagreements;

  const auto wc = weight_check(s);
  if (wc.total_weight > wc.threshold) ++st.weight_bound_violations;
  if (wc.solvable != is_solved(star)) ++st.ac3_disagreements;

  if (!oracle) return;
  ++st.solvable;
  StarGraph graph(s);
  const std::vector<Matching> starts{max_matching(graph.graph()),
                                     testing::shuffled_max_matching(graph.graph(), rng)};
  for (const auto& m : starts) {
    if (m.size() != graph.cover_size()) {
      ++st.repair_failures;
      continue;
    }
    ++st.repaired_matchings;
    const auto k = find_mismatches(graph, m).count();
    st.total_initial_mismatches += k;
    const auto r = repair_mismatches(graph, m);
    bool ok = r.initial_mismatches == k && r.iterations <= k &&
              r.matching.size() == graph.cover_size() &&
              r.matching.is_valid_for(graph.graph()) &&
              find_mismatches(graph, r.matching).count() == 0;
    for (Index g = 0; ok && g < s.girl_count(); ++g) {
      if (s.girl_listed(g) && !r.matching.left_covered(g)) ok = false;
    }
    for (Index b = 0; ok && b < s.boy_count(); ++b) {
      if (s.boy_listed(b) && !r.matching.right_covered(b)) ok = false;
    }
    if (ok) ok = verifies(s, extract_assignment(graph, r.matching));
    if (!ok) ++st.repair_failures;
  }
}

void corpus_criteria() {
  const auto start = Clock::now();
  CorpusStats st;
  std::mt19937_64 rng(20260101);
  testing::for_each_3x3([&](const SmpInstance& s) { check_instance(s, st, rng); });
  const std::size_t exhaustive = st.instances;

  const std::size_t kRandom = 12000;
  for (std::size_t i = 0; i < kRandom; ++i) {
    const std::size_t ng = 4 + rng() % 3, nb = 4 + rng() % 3;
    const double pg = 0.1 * static_cast<double>(rng() % 11);
    const double pb = 0.1 * static_cast<double>(rng() % 11);
    const std::size_t max_list = 1 + rng() % 4;
    check_instance(random_instance({ng, nb, pg, pb, max_list}, Seed{rng()}), st, rng);
    ++st.random_instances;
  }
  const double elapsed = seconds_since(start);

  std::ostringstream corpus;
  corpus << exhaustive << " exhaustive 3x3 + " << st.random_instances << " random 4..6 instances ("
         << st.solvable << " solvable), " << elapsed << " s";
  const bool sized = exhaustive == 262144 && st.random_instances >= 10000 && elapsed < 60.0;

  report(1, sized && st.ac1_disagreements == 0,
         "solve <=> both sub-CMPs <=> oracle: " + std::to_string(st.ac1_disagreements) +
             " disagreements; " + corpus.str());
  report(2, sized && st.ac2_disagreements == 0,
         "bi-criteria <=> solvable: " + std::to_string(st.ac2_disagreements) + " disagreements");
  report(3, sized && st.ac3_disagreements == 0 && st.weight_bound_violations == 0,
         "weight threshold <=> solve: " + std::to_string(st.ac3_disagreements) +
             " disagreements, " + std::to_string(st.weight_bound_violations) +
             " weight bound violations");
  report(4, sized && st.repair_failures == 0 && st.repaired_matchings >= 2 * st.solvable,
         "repair: " + std::to_string(st.repaired_matchings) + " maximum matchings repaired (" +
             std::to_string(st.total_initial_mismatches) + " initial mismatches), " +
             std::to_string(st.repair_failures) + " failures");
}

void tournament_criterion() {
  const auto start = Clock::now();
  std::size_t runs = 0, bad = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      ++runs;
      const auto t = gen_tournament_full(n, Seed{seed});
      bool ok = is_round_robin(t.schedule, 2 * n);
      for (const auto& w : t.winners) ok = ok && w.size() == n;
      const auto r = solve(cmp_to_smp(t.cmp));
      if (ok && is_solved(r)) {
        const auto& pairs = std::get<Assignment>(r).pairs;
        std::set<Index> sessions, winners;
        for (auto p : pairs) {
          sessions.insert(p.girl);
          winners.insert(p.boy);
          const auto& w = t.winners[p.girl];
          ok = ok && std::binary_search(w.begin(), w.end(), p.boy);
        }
        ok = ok && sessions.size() == 2 * n - 1 && winners.size() == 2 * n - 1;
      } else {
        ok = false;
      }
      ok = ok && covers(t.cmp);
      if (!ok) ++bad;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "tournament n=1..4 x 200 seeds: " << bad << " failures of " << runs << ", " << elapsed << " s";
  report(5, bad == 0 && runs == 800 && elapsed < 10.0, d.str());
}

void rooks_criterion() {
  std::size_t runs = 0, bad = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      ++runs;
      const auto board = gen_rooks_board(n, Seed{seed});
      const auto c = rooks_cmp(board);
      BipartiteGraph g(c.left.size(), c.right.size(), c.lists);
      const auto m = max_matching(g);
      bool ok = has_n_rooks_per_line(board, n) && m.size() == 2 * n;
      std::set<Index> cols;
      for (auto [row, col] : m.pairs()) {
        ok = ok && board[row][col];
        cols.insert(col);
      }
      ok = ok && cols.size() == 2 * n;
      ok = ok && is_solved(solve(cmp_to_smp(c)));
      if (!ok) ++bad;
    }
  }
  report(6, bad == 0 && runs == 800,
         "rooks n=1..4 x 200 seeds: " + std::to_string(bad) + " failures of " + std::to_string(runs) +
             " (all 2n rows matched to distinct columns)");
}

void chessboard_criterion() {
  std::size_t runs = 0, bad = 0, pairs_checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ++runs;
      const auto c = gen_chessboard(n, Seed{seed});
      bool ok = chessboard_rules_hold(c);
      const auto& s = c.instance;
      const auto r = solve(s);
      const auto w = build_weighted(s);
      if (ok && is_solved(r)) {
        for (auto p : std::get<Assignment>(r).pairs) {
          ++pairs_checked;
          const int sum = c.cell_sum[p.girl][p.boy];
          ok = ok && (sum == 1 || sum == 2) && w.weight(p.girl, p.boy) == sum;
        }
        ok = ok && assignment_solves(s, std::get<Assignment>(r));
      } else {
        ok = false;
      }
      ok = ok && solvable_via_weight(s) && !hall_bicriteria(s).has_value();
      if (!ok) ++bad;
    }
  }
  report(7, bad == 0 && runs == 300,
         "chessboard n=1..3 x 100 seeds: " + std::to_string(bad) + " failures of " +
             std::to_string(runs) + ", " + std::to_string(pairs_checked) +
             " selected cells positive and equal to their weight");
}

void certificate_criterion() {
  std::mt19937_64 rng(8088);
  std::size_t unsolvable = 0, invalid = 0, attempts = 0;
  while (unsolvable < 1500 && attempts < 200000) {
    ++attempts;
    const std::size_t ng = 2 + rng() % 40, nb = 2 + rng() % 40;
    const double pg = 0.1 * static_cast<double>(1 + rng() % 10);
    const double pb = 0.1 * static_cast<double>(1 + rng() % 10);
    const auto s = random_instance({ng, nb, pg, pb, 1 + rng() % 5}, Seed{rng()});
    for (const auto& result : {solve(s), solve_via_subproblems(s)}) {
      if (is_solved(result)) continue;
      ++unsolvable;
      if (!certificate_ok(s, std::get<Unsolvable>(result).violator)) ++invalid;
    }
  }
  report(8, unsolvable >= 1000 && invalid == 0,
         std::to_string(unsolvable) + " unsolvable results, " + std::to_string(invalid) +
             " invalid certificates");
}

void scaling_criterion() {
  const std::size_t n = 10000;
  struct Case {
    std::string name;
    std::function<SmpInstance()> make;
  };
  const std::vector<Case> cases{
      {"planted, all listed", [&] { return planted_instance(n, 1.0, 10, Seed{1}); }},
      {"planted, half listed", [&] { return planted_instance(n, 0.5, 10, Seed{2}); }},
      {"random, half listed", [&] { return random_instance({n, n, 0.5, 0.5, 19}, Seed{3}); }},
      {"random, 5% listed", [&] { return random_instance({n, n, 0.05, 0.05, 19}, Seed{4}); }},
  };
  bool pass = true;
  std::ostringstream d;
  d << "|G|=|B|=" << n << ":";
  for (const auto& c : cases) {
    const auto s = c.make();
    std::size_t entries = 0, lists = 0;
    for (Index g = 0; g < n; ++g) {
      entries += s.girl_list(g).size();
      lists += s.girl_listed(g);
    }
    for (Index b = 0; b < n; ++b) {
      entries += s.boy_list(b).size();
      lists += s.boy_listed(b);
    }
    const double mean = lists ? static_cast<double>(entries) / static_cast<double>(lists) : 0.0;
    const auto start = Clock::now();
    const auto r = solve(s);
    const double elapsed = seconds_since(start);
    bool ok = elapsed < 5.0 && mean >= 9.0 && mean <= 11.0;
    if (is_solved(r)) {
      ok = ok && assignment_solves(s, std::get<Assignment>(r));
    } else {
      ok = ok && certificate_ok(s, std::get<Unsolvable>(r).violator);
    }
    if (c.name.rfind("planted", 0) == 0) ok = ok && is_solved(r);
    pass = pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, " [%s: mean list %.2f, %s, %.3f s]", c.name.c_str(), mean,
                  is_solved(r) ? "solved" : "unsolvable", elapsed);
    d << buf;
  }
  report(9, pass, d.str());
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "smp");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void determinism_criterion() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("smp_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::size_t compared = 0, differing = 0;
  auto same = [&](const Captured& a, const Captured& b) {
    ++compared;
    if (a.code != b.code || a.out != b.out || a.err != b.err) ++differing;
  };

  std::vector<std::vector<std::string>> gens;
  for (const char* kind : {"tournament", "rooks", "chessboard"}) {
    for (const char* n : {"1", "2", "3"}) {
      for (const char* seed : {"0", "7", "123456789"}) gens.push_back({"gen", kind, "--n", n, "--seed", seed});
    }
  }
  for (const char* seed : {"0", "5", "99"}) {
    gens.push_back({"gen", "assignment", "--workers", "8", "--tasks", "7", "--paid", "4", "--mandatory",
                    "3", "--seed", seed});
  }

  std::size_t file_index = 0;
  std::vector<std::string> instance_files;
  for (const auto& args : gens) {
    const auto a = run_cli(args), b = run_cli(args);
    same(a, b);
    const auto path = (dir / ("inst" + std::to_string(file_index++) + ".json")).string();
    auto to_file = args;
    to_file.insert(to_file.end(), {"-o", path});
    run_cli(to_file);
    if (read_text_file(path) != a.out) ++differing;
    instance_files.push_back(path);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto path = (dir / ("rand" + std::to_string(seed) + ".json")).string();
    RawInstance raw{random_instance({5, 5, 0.6, 0.6, 2}, Seed{seed}).to_named(), {}};
    std::ofstream(path) << serialize_instance(raw);
    instance_files.push_back(path);
  }

  for (const auto& inst : instance_files) {
    for (const char* method : {"star", "subproblems", "weight"}) {
      const auto a = run_cli({"solve", inst, "--method", method});
      const auto b = run_cli({"solve", inst, "--method", method});
      same(a, b);
      const auto res = (dir / "result.json").string();
      std::ofstream(res) << a.out;
      same(run_cli({"verify", inst, res}), run_cli({"verify", inst, res}));
    }
    same(run_cli({"check", inst}), run_cli({"check", inst}));
  }

  // Library generators, compared through their serialized form.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Seed s{seed};
    auto twice = [&](const std::function<SmpInstance()>& f) {
      ++compared;
      RawInstance a{f().to_named(), {}}, b{f().to_named(), {}};
      if (serialize_instance(a) != serialize_instance(b)) ++differing;
    };
    twice([&] { return cmp_to_smp(gen_tournament(3, s)); });
    twice([&] { return cmp_to_smp(gen_rooks(3, s)); });
    twice([&] { return gen_chessboard(2, s).instance; });
    twice([&] { return gen_assignment({6, 6, 3, 3, 0.3}, s); });
    twice([&] { return random_instance({20, 20, 0.5, 0.5, 4}, s); });
    twice([&] { return planted_instance(20, 0.7, 3, s); });
  }
  fs::remove_all(dir);
  report(10, differing == 0 && compared > 0,
         std::to_string(compared) + " repeated command and generator runs, " +
             std::to_string(differing) + " differences");
}

}  // namespace

int main() {
  corpus_criteria();
  tournament_criterion();
  rooks_criterion();
  chessboard_criterion();
  certificate_criterion();
  scaling_criterion();
  determinism_criterion();
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
