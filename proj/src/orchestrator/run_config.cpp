// Copyright 2026 The Ventalloc Authors
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

#include "ventalloc/orchestrator/run_config.hpp"

#include <fstream>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

using nlohmann::json;

InputRef input_from_json(const json& doc, const char* inline_key) {
  InputRef ref;
  if (doc.is_string()) {
    ref.path = doc.get<std::string>();
  } else if (doc.is_object()) {
    if (doc.contains(inline_key)) {
      ref.inline_text = doc.at(inline_key).get<std::string>();
    } else if (doc.contains("path")) {
      ref.path = doc.at("path").get<std::string>();
    } else {
      ref.inline_text = doc.dump();
    }
  } else {
    throw InputError("input reference must be a path or an object");
  }
  return ref;
}

json input_to_json(const InputRef& ref, const char* inline_key, bool inline_is_json) {
  if (ref.path) return *ref.path;
  if (!ref.inline_text) return nullptr;
  if (inline_is_json) return json::parse(*ref.inline_text);
  return {{inline_key, *ref.inline_text}};
}

template <typename T>
void read_optional(const json& doc, const char* key, T& target) {
  if (doc.contains(key) && !doc.at(key).is_null()) target = doc.at(key).get<T>();
}

void read_optional_path(const json& doc, const char* key, std::optional<std::string>& target) {
  if (doc.contains(key) && !doc.at(key).is_null()) target = doc.at(key).get<std::string>();
}

}  // namespace

std::filesystem::path RunConfig::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  return base_dir / p;
}

RunConfig run_config_from_json(const json& doc, const std::filesystem::path& base_dir) {
  RunConfig config;
  config.base_dir = base_dir;
  std::string field = "schema_version";
  try {
    if (!doc.is_object()) throw InputError("run config must be a JSON object");
    if (doc.contains("schema_version")) {
      const int version = doc.at("schema_version").get<int>();
      if (version != RunConfig::kSchemaVersion) {
        throw InputError("unsupported run config schema_version " + std::to_string(version));
      }
    }
    field = "instance";
    if (doc.contains("instance")) config.instance = input_from_json(doc.at("instance"), "json");
    field = "forecast";
    if (doc.contains("forecast")) config.forecast = input_from_json(doc.at("forecast"), "csv");
    field = "scenarios";
    read_optional_path(doc, "scenarios", config.scenarios_path);
    field = "case";
    if (doc.contains("case")) config.case_spec = case_from_json(doc.at("case"));
    config.scenario_count = config.case_spec.scenario_count;
    field = "scenario_count";
    read_optional(doc, "scenario_count", config.scenario_count);
    config.case_spec.scenario_count = config.scenario_count;
    field = "seed";
    read_optional(doc, "seed", config.seed);
    field = "limits";
    if (doc.contains("limits")) {
      const json& limits = doc.at("limits");
      read_optional(limits, "time_limit_seconds", config.limits.time_limit_seconds);
      read_optional(limits, "relative_gap", config.limits.relative_gap);
      read_optional(limits, "absolute_gap", config.limits.absolute_gap);
      if (limits.contains("node_limit") && !limits.at("node_limit").is_null()) {
        config.limits.node_limit = limits.at("node_limit").get<std::int64_t>();
      }
    }
    field = "strategy";
    if (doc.contains("strategy")) {
      config.strategy = strategy_from_name(doc.at("strategy").get<std::string>());
    }
    field = "big_m_policy";
    if (doc.contains("big_m_policy")) {
      config.big_m = big_m_policy_from_name(doc.at("big_m_policy").get<std::string>());
    }
    field = "workers";
    read_optional(doc, "workers", config.workers);
    field = "outputs";
    if (doc.contains("outputs")) {
      const json& out = doc.at("outputs");
      read_optional_path(out, "report_json", config.report_json_path);
      read_optional_path(out, "flows_csv", config.flows_csv_path);
      read_optional_path(out, "daily_csv", config.daily_csv_path);
      read_optional_path(out, "scenarios_json", config.scenarios_json_path);
    }
  } catch (const json::exception& e) {
    throw InputError("run config field '" + field + "': " + e.what());
  } catch (const InputError& e) {
    if (field == "schema_version") throw;
    throw InputError("run config field '" + field + "': " + e.what());
  }
  return config;
}

json run_config_to_json(const RunConfig& config) {
  json doc = {{"schema_version", RunConfig::kSchemaVersion},
              {"case", case_to_json(config.case_spec)},
              {"scenario_count", config.scenario_count},
              {"seed", config.seed},
              {"strategy", strategy_name(config.strategy)},
              {"big_m_policy", big_m_policy_name(config.big_m)},
              {"workers", config.workers}};
  json limits = {{"time_limit_seconds", config.limits.time_limit_seconds},
                 {"relative_gap", config.limits.relative_gap},
                 {"absolute_gap", config.limits.absolute_gap}};
  limits["node_limit"] = config.limits.node_limit ? json(*config.limits.node_limit) : json(nullptr);
  doc["limits"] = limits;
  if (config.instance.path || config.instance.inline_text) {
    doc["instance"] = input_to_json(config.instance, "json", true);
  }
  if (config.forecast.path || config.forecast.inline_text) {
    doc["forecast"] = input_to_json(config.forecast, "csv", false);
  }
  if (config.scenarios_path) doc["scenarios"] = *config.scenarios_path;
  json outputs = json::object();
  if (config.report_json_path) outputs["report_json"] = *config.report_json_path;
  if (config.flows_csv_path) outputs["flows_csv"] = *config.flows_csv_path;
  if (config.daily_csv_path) outputs["daily_csv"] = *config.daily_csv_path;
  if (config.scenarios_json_path) outputs["scenarios_json"] = *config.scenarios_json_path;
  if (!outputs.empty()) doc["outputs"] = outputs;
  return doc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open run config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("run config '" + path + "': " + e.what());
  }
  return run_config_from_json(doc, std::filesystem::absolute(path).parent_path());
}

void validate_run_config(const RunConfig& config) {
  std::vector<ValidationIssue> issues;
  auto check_ref = [&](const InputRef& ref, const char* field) {
    if (!ref.path && !ref.inline_text) {
      issues.push_back({field, "", "missing"});
    } else if (ref.path && !std::filesystem::exists(config.resolve(*ref.path))) {
      issues.push_back({field, *ref.path, "file not found"});
    }
  };
  check_ref(config.instance, "instance");
  if (config.scenarios_path) {
    if (!std::filesystem::exists(config.resolve(*config.scenarios_path))) {
      issues.push_back({"scenarios", *config.scenarios_path, "file not found"});
    }
  } else {
    check_ref(config.forecast, "forecast");
  }
  if (config.scenario_count < 1) issues.push_back({"scenario_count", "", "must be at least 1"});
  if (config.workers < 1) issues.push_back({"workers", "", "must be at least 1"});
  if (!(config.limits.time_limit_seconds > 0)) {
    issues.push_back({"limits.time_limit_seconds", "", "must be positive"});
  }
  if (!(config.limits.relative_gap >= 0)) issues.push_back({"limits.relative_gap", "", "must be >= 0"});
  if (!(config.limits.absolute_gap >= 0)) issues.push_back({"limits.absolute_gap", "", "must be >= 0"});
  if (config.limits.node_limit && *config.limits.node_limit < 1) {
    issues.push_back({"limits.node_limit", "", "must be at least 1"});
  }
  try {
    validate_case(config.case_spec);
  } catch (const ValidationError& e) {
    for (const ValidationIssue& issue : e.issues()) {
      if (issue.field != "scenario_count") issues.push_back({"case." + issue.field, "", issue.message});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

}  // namespace ventalloc
