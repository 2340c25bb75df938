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

#include "smp/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace smp {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw FormatError(message);
}

void require_keys(const Json& doc, const std::set<std::string>& allowed, const char* what) {
  require(doc.is_object(), std::string(what) + " must be an object");
  for (const auto& [key, _] : doc.items()) {
    require(allowed.count(key) > 0, std::string("unknown key \"") + key + "\" in " + what);
  }
}

std::vector<std::string> string_array(const Json& value, const std::string& what) {
  require(value.is_array(), what + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    require(item.is_string(), what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Lists keyed by owner name; absent owners get an empty (wildcard) list.
std::vector<std::vector<std::string>> lists_for(const Json& doc, const char* key,
                                                const std::vector<std::string>& owners,
                                                const char* owner_noun) {
  std::vector<std::vector<std::string>> out(owners.size());
  if (!doc.contains(key)) return out;
  const Json& lists = doc.at(key);
  require(lists.is_object(), std::string(key) + " must be an object");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < owners.size(); ++i) index.emplace(owners[i], i);
  for (const auto& [name, value] : lists.items()) {
    auto it = index.find(name);
    require(it != index.end(), std::string(key) + " names unknown " + owner_noun + " " + name);
    auto list = string_array(value, std::string(key) + "." + name);
    require(!list.empty(), std::string(key) + "." + name +
                               " is an explicit empty list; omit the key for no list");
    out[it->second] = std::move(list);
  }
  return out;
}

Json lists_json(const std::vector<std::string>& owners,
                const std::vector<std::vector<std::string>>& lists) {
  Json out = Json::object();
  for (std::size_t i = 0; i < owners.size(); ++i) {
    if (!lists[i].empty()) out[owners[i]] = lists[i];
  }
  return out;
}

const char* status_name(ResultStatus status) {
  switch (status) {
    case ResultStatus::kSolved:
      return "solved";
    case ResultStatus::kUnsolvable:
      return "unsolvable";
    case ResultStatus::kInfeasible:
      return "infeasible";
  }
  return "?";
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

RawInstance instance_from_json(const Json& doc) {
  require_keys(doc, {"version", "girls", "boys", "girl_lists", "boy_lists", "refusers"}, "instance");
  require(doc.contains("version") && doc.at("version").is_number_integer() &&
              doc.at("version").get<long long>() == kFormatVersion,
          "version must be the integer 1");
  require(doc.contains("girls") && doc.contains("boys"), "instance needs girls and boys");
  RawInstance raw;
  raw.instance.girls = string_array(doc.at("girls"), "girls");
  raw.instance.boys = string_array(doc.at("boys"), "boys");
  raw.instance.girl_lists = lists_for(doc, "girl_lists", raw.instance.girls, "girl");
  raw.instance.boy_lists = lists_for(doc, "boy_lists", raw.instance.boys, "boy");
  if (doc.contains("refusers")) raw.refusers = string_array(doc.at("refusers"), "refusers");

  auto violations = validate(raw.instance);
  std::set<std::string> people(raw.instance.girls.begin(), raw.instance.girls.end());
  people.insert(raw.instance.boys.begin(), raw.instance.boys.end());
  std::set<std::string> seen;
  for (const auto& r : raw.refusers) {
    if (!people.count(r)) violations.push_back("unknown refuser " + r);
    if (!seen.insert(r).second) violations.push_back("duplicate refuser " + r);
  }
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) msg << "\n  " << v;
    throw FormatError(msg.str());
  }
  return raw;
}

Json instance_to_json(const RawInstance& raw) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["girls"] = raw.instance.girls;
  doc["boys"] = raw.instance.boys;
  doc["girl_lists"] = lists_json(raw.instance.girls, raw.instance.girl_lists);
  doc["boy_lists"] = lists_json(raw.instance.boys, raw.instance.boy_lists);
  if (!raw.refusers.empty()) doc["refusers"] = raw.refusers;
  return doc;
}

RawInstance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

std::string serialize_instance(const RawInstance& raw) { return instance_to_json(raw).dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RawInstance read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

ResultFile result_from_json(const Json& doc) {
  require_keys(doc, {"status", "assignment", "violator", "infeasible_member"}, "result");
  require(doc.contains("status") && doc.at("status").is_string(), "result needs a status string");
  const auto status = doc.at("status").get<std::string>();
  ResultFile r;
  if (status == "solved") {
    r.status = ResultStatus::kSolved;
    require(doc.contains("assignment") && doc.size() == 2, "solved result carries only an assignment");
    const Json& a = doc.at("assignment");
    require(a.is_array(), "assignment must be an array");
    for (const auto& pair : a) {
      auto names = string_array(pair, "assignment pair");
      require(names.size() == 2, "assignment pairs must be [girl, boy]");
      r.assignment.emplace_back(names[0], names[1]);
    }
  } else if (status == "unsolvable") {
    r.status = ResultStatus::kUnsolvable;
    require(doc.contains("violator") && doc.size() == 2, "unsolvable result carries only a violator");
    const Json& v = doc.at("violator");
    require_keys(v, {"side", "members", "union_size"}, "violator");
    require(v.contains("side") && v.at("side").is_string(), "violator needs a side");
    const auto side = v.at("side").get<std::string>();
    require(side == "girls" || side == "boys", "violator side must be girls or boys");
    require(v.contains("members"), "violator needs members");
    require(v.contains("union_size") && v.at("union_size").is_number_unsigned(),
            "violator needs a non-negative union_size");
    r.violator = ViolatorRecord{side == "girls" ? Side::kGirls : Side::kBoys,
                                string_array(v.at("members"), "violator.members"),
                                v.at("union_size").get<std::size_t>()};
  } else if (status == "infeasible") {
    r.status = ResultStatus::kInfeasible;
    require(doc.contains("infeasible_member") && doc.at("infeasible_member").is_string() &&
                doc.size() == 2,
            "infeasible result carries only infeasible_member");
    r.infeasible_member = doc.at("infeasible_member").get<std::string>();
  } else {
    throw FormatError("unknown status " + status);
  }
  return r;
}

Json result_to_json(const ResultFile& result) {
  Json doc;
  doc["status"] = status_name(result.status);
  switch (result.status) {
    case ResultStatus::kSolved: {
      Json pairs = Json::array();
      for (const auto& [g, b] : result.assignment) pairs.push_back(Json::array({g, b}));
      doc["assignment"] = pairs;
      break;
    }
    case ResultStatus::kUnsolvable: {
      if (!result.violator) throw std::invalid_argument("unsolvable result without violator");
      Json v;
      v["side"] = side_name(result.violator->side);
      v["members"] = result.violator->members;
      v["union_size"] = result.violator->union_size;
      doc["violator"] = v;
      break;
    }
    case ResultStatus::kInfeasible:
      if (!result.infeasible_member) throw std::invalid_argument("infeasible result without member");
      doc["infeasible_member"] = *result.infeasible_member;
      break;
  }
  return doc;
}

ResultFile parse_result(const std::string& text) { return result_from_json(parse_json(text)); }

std::string serialize_result(const ResultFile& result) { return result_to_json(result).dump(2) + "\n"; }

ResultFile read_result_file(const std::string& path) { return parse_result(read_text_file(path)); }

ViolatorRecord violator_record(const SmpInstance& instance, const HallViolator& violator) {
  ViolatorRecord rec{violator.side, {}, violator.union_size};
  for (Index m : violator.members) {
    rec.members.push_back(violator.side == Side::kGirls ? instance.girl_name(m) : instance.boy_name(m));
  }
  return rec;
}

}  // namespace smp
