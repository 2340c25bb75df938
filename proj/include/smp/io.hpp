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

// JSON instance and result files.
//
// Instance file:
//   {"version": 1,
//    "girls": ["g1", "g2"], "boys": ["b1", "b2"],
//    "girl_lists": {"g1": ["b1", "b2"]},     // omitted key = no list
//    "boy_lists": {"b1": ["g2"]},
//    "refusers": ["g3"]}                      // optional
//
// Result file:
//   {"status": "solved", "assignment": [["g1", "b2"], ["g2", "b1"]]}
//   {"status": "unsolvable",
//    "violator": {"side": "girls", "members": ["g1", "g2"], "union_size": 1}}
//   {"status": "infeasible", "infeasible_member": "g1"}

#ifndef SMP_IO_HPP_
#define SMP_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "smp/hall_oracle.hpp"
#include "smp/instance.hpp"

namespace smp {

using Json = nlohmann::ordered_json;

// Malformed document: bad JSON, wrong types, unknown keys, explicit empty
// list, or a RawInstance that fails validation.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

RawInstance instance_from_json(const Json& doc);
Json instance_to_json(const RawInstance& raw);
RawInstance parse_instance(const std::string& text);
std::string serialize_instance(const RawInstance& raw);

RawInstance read_instance_file(const std::string& path);

enum class ResultStatus { kSolved, kUnsolvable, kInfeasible };

struct ViolatorRecord {
  Side side = Side::kGirls;
  std::vector<std::string> members;
  std::size_t union_size = 0;

  bool operator==(const ViolatorRecord&) const = default;
};

struct ResultFile {
  ResultStatus status = ResultStatus::kSolved;
  std::vector<std::pair<std::string, std::string>> assignment;
  std::optional<ViolatorRecord> violator;
  std::optional<std::string> infeasible_member;

  bool operator==(const ResultFile&) const = default;
};

ResultFile result_from_json(const Json& doc);
Json result_to_json(const ResultFile& result);
ResultFile parse_result(const std::string& text);
std::string serialize_result(const ResultFile& result);

ResultFile read_result_file(const std::string& path);

ViolatorRecord violator_record(const SmpInstance& instance, const HallViolator& violator);

// Reads a whole file; throws FormatError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace smp

#endif  // SMP_IO_HPP_
