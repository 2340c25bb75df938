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

#include "smp/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "smp/generators.hpp"
#include "smp/hall_oracle.hpp"
#include "smp/star_solver.hpp"
#include "smp/weighted.hpp"

namespace smp::cli {
namespace {

ResultFile from_solve(const SmpInstance& instance, const SolveResult& result) {
  ResultFile out;
  if (const auto* a = std::get_if<Assignment>(&result)) {
    out.status = ResultStatus::kSolved;
    out.assignment = assignment_names(instance, *a);
  } else {
    out.status = ResultStatus::kUnsolvable;
    out.violator = violator_record(instance, std::get<Unsolvable>(result).violator);
  }
  return out;
}

// Writes to `path`, or to `out` when path is "-".
bool write_output(const std::string& path, const std::string& text, std::ostream& out,
                  std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string describe(const ViolatorRecord& v) {
  std::string s = std::string("violator ") + side_name(v.side) + " [";
  for (std::size_t i = 0; i < v.members.size(); ++i) s += (i ? ", " : "") + v.members[i];
  return s + "] union_size " + std::to_string(v.union_size);
}

}  // namespace

ResultFile solve_to_result(const RawInstance& raw, Method method) {
  auto pre = preprocess_refusals(raw);
  if (const auto* inf = std::get_if<Infeasible>(&pre)) {
    ResultFile out;
    out.status = ResultStatus::kInfeasible;
    out.infeasible_member = inf->member;
    return out;
  }
  const auto& instance = std::get<SmpInstance>(pre);
  switch (method) {
    case Method::kStar:
      return from_solve(instance, solve(instance));
    case Method::kSubproblems:
      return from_solve(instance, solve_via_subproblems(instance));
    case Method::kWeight: {
      auto check = weight_check(instance);
      if (check.solvable) return from_solve(instance, *check.assignment);
      auto violator = subproblem_violator(instance);
      if (!violator) throw std::logic_error("weight threshold missed but no Hall violator found");
      return from_solve(instance, Unsolvable{*violator});
    }
  }
  throw std::logic_error("unknown method");
}

VerifyOutcome verify_result(const RawInstance& raw, const ResultFile& result) {
  if (result.status == ResultStatus::kInfeasible) {
    const std::string& member = result.infeasible_member.value_or("");
    const std::set<std::string> refusers(raw.refusers.begin(), raw.refusers.end());
    if (refusers.count(member)) return {false, member + " is a refuser"};
    const auto& in = raw.instance;
    const std::vector<std::string>* list = nullptr;
    for (std::size_t i = 0; i < in.girls.size(); ++i) {
      if (in.girls[i] == member) list = &in.girl_lists[i];
    }
    for (std::size_t i = 0; i < in.boys.size(); ++i) {
      if (in.boys[i] == member) list = &in.boy_lists[i];
    }
    if (!list) return {false, "unknown member " + member};
    if (list->empty()) return {false, member + " has no list"};
    for (const auto& x : *list) {
      if (!refusers.count(x)) return {false, member + " keeps " + x + " after refusals"};
    }
    return {true, "refusals empty the list of " + member};
  }

  auto pre = preprocess_refusals(raw);
  if (const auto* inf = std::get_if<Infeasible>(&pre)) {
    return {false, "instance is infeasible at " + inf->member};
  }
  const auto& instance = std::get<SmpInstance>(pre);

  if (result.status == ResultStatus::kSolved) {
    Assignment a;
    for (const auto& [gn, bn] : result.assignment) {
      auto g = instance.find_girl(gn);
      auto b = instance.find_boy(bn);
      if (!g || !b) return {false, "unknown pair [" + gn + ", " + bn + "]"};
      a.pairs.push_back({*g, *b});
    }
    if (!assignment_solves(instance, a)) return {false, "assignment violates the marriage contract"};
    return {true, "assignment valid"};
  }

  if (!result.violator) return {false, "unsolvable result without violator"};
  const auto& v = *result.violator;
  HallViolator hv{v.side, {}, v.union_size};
  for (const auto& name : v.members) {
    auto idx = v.side == Side::kGirls ? instance.find_girl(name) : instance.find_boy(name);
    if (!idx) return {false, "unknown violator member " + name};
    hv.members.push_back(*idx);
  }
  if (!violator_holds(instance, hv)) return {false, "violator does not re-verify"};
  return {true, "violator valid"};
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  RawInstance raw;
  try {
    raw = read_instance_file(options.input);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  ResultFile result;
  try {
    result = solve_to_result(raw, options.method);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  if (!write_output(options.output, serialize_result(result), out, err)) return kIoError;
  switch (result.status) {
    case ResultStatus::kSolved:
      return kOk;
    case ResultStatus::kUnsolvable:
      return kUnsolvable;
    case ResultStatus::kInfeasible:
      return kInfeasible;
  }
  return kInternal;
}

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    const auto raw = read_instance_file(input);
    auto pre = preprocess_refusals(raw);
    if (const auto* inf = std::get_if<Infeasible>(&pre)) {
      out << "infeasible " << inf->member << "\n";
      return kInfeasible;
    }
    const auto& instance = std::get<SmpInstance>(pre);
    auto violator = hall_bicriteria(instance);
    if (!violator) {
      out << "ok\n";
      return kOk;
    }
    out << describe(violator_record(instance, *violator)) << "\n";
    return kUnsolvable;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

RawInstance generate(const GenOptions& o) {
  const Seed seed{o.seed};
  RawInstance raw;
  if (o.kind == "tournament") {
    raw.instance = cmp_to_smp(gen_tournament(o.n, seed)).to_named();
  } else if (o.kind == "rooks") {
    raw.instance = cmp_to_smp(gen_rooks(o.n, seed)).to_named();
  } else if (o.kind == "chessboard") {
    raw.instance = gen_chessboard(o.n, seed).instance.to_named();
  } else if (o.kind == "assignment") {
    raw.instance = gen_assignment({o.workers, o.tasks, o.paid, o.mandatory, o.density}, seed).to_named();
  } else {
    throw std::invalid_argument("unknown generator kind " + o.kind);
  }
  return raw;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  RawInstance raw;
  try {
    raw = generate(options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  if (!write_output(options.output, serialize_instance(raw), out, err)) return kIoError;
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& result_path, std::ostream& out,
               std::ostream& err) {
  try {
    const auto raw = read_instance_file(instance_path);
    const auto result = read_result_file(result_path);
    const auto outcome = verify_result(raw, result);
    out << (outcome.valid ? "valid: " : "invalid: ") << outcome.reason << "\n";
    return outcome.valid ? kOk : kUnsolvable;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric marriage problem solver"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", solve_opts.input, "Instance file")->required();
  const std::map<std::string, Method> methods{
      {"star", Method::kStar}, {"subproblems", Method::kSubproblems}, {"weight", Method::kWeight}};
  solve_cmd->add_option("--method", solve_opts.method, "star | subproblems | weight")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  solve_cmd->add_option("-o,--output", solve_opts.output, "Result file, - for stdout");

  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "Check Hall's bi-criteria by enumeration");
  check_cmd->add_option("input", check_input, "Instance file")->required();

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an application instance");
  gen_cmd->add_option("kind", gen_opts.kind, "tournament | rooks | chessboard | assignment")
      ->required()
      ->check(CLI::IsMember({"tournament", "rooks", "chessboard", "assignment"}));
  gen_cmd->add_option("--n", gen_opts.n, "Size parameter")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_opts.seed, "Random seed");
  gen_cmd->add_option("--workers", gen_opts.workers, "assignment: number of workers");
  gen_cmd->add_option("--tasks", gen_opts.tasks, "assignment: number of tasks");
  gen_cmd->add_option("--paid", gen_opts.paid, "assignment: number of paid workers");
  gen_cmd->add_option("--mandatory", gen_opts.mandatory, "assignment: number of mandatory tasks");
  gen_cmd->add_option("--density", gen_opts.density, "assignment: capability probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-o,--output", gen_opts.output, "Instance file, - for stdout");

  std::string verify_instance, verify_result_path;
  auto* verify_cmd = app.add_subcommand("verify", "Independently check a result file");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("result", verify_result_path, "Result file")->required();

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("smp");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (*solve_cmd) return cmd_solve(solve_opts, out, err);
  if (*check_cmd) return cmd_check(check_input, out, err);
  if (*gen_cmd) return cmd_gen(gen_opts, out, err);
  if (*verify_cmd) return cmd_verify(verify_instance, verify_result_path, out, err);
  return kUsage;
}

}  // namespace smp::cli
