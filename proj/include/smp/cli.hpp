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

#ifndef SMP_CLI_HPP_
#define SMP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "smp/io.hpp"

namespace smp::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsolvable = 1,  // also: check found a violator, verify rejected
  kInfeasible = 2,
  kSizeLimit = 3,
  kUsage = 64,
  kDataError = 65,
  kInternal = 70,
  kIoError = 74,
};

enum class Method { kStar, kSubproblems, kWeight };

// Solves a raw instance end to end: refusal preprocessing, then `method`.
// Unsolvable results from the weight method take their certificate from the
// matching-based subproblem check.
ResultFile solve_to_result(const RawInstance& raw, Method method);

struct VerifyOutcome {
  bool valid = false;
  std::string reason;
};

// Re-checks a claimed result against the instance from the definitions alone.
VerifyOutcome verify_result(const RawInstance& raw, const ResultFile& result);

struct SolveOptions {
  std::string input;
  Method method = Method::kStar;
  std::string output = "-";
};

struct GenOptions {
  std::string kind;  // tournament | rooks | chessboard | assignment
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::size_t workers = 6;
  std::size_t tasks = 6;
  std::size_t paid = 3;
  std::size_t mandatory = 3;
  double density = 0.3;
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& instance_path, const std::string& result_path, std::ostream& out,
               std::ostream& err);

// The generated instance for `options`, as written by cmd_gen.
RawInstance generate(const GenOptions& options);

// Parses arguments (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smp::cli

#endif  // SMP_CLI_HPP_
