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

#include <cmath>
#include <fstream>

#include "ventalloc/common/error.hpp"
#include "ventalloc/scenario/scenario.hpp"

namespace ventalloc {

using nlohmann::json;

json case_to_json(const CaseSpec& spec) {
  return {{"label", spec.label},
          {"right_tail_prob", spec.right_tail_prob},
          {"right_tail_weight", spec.right_tail_weight},
          {"left_tail_weight", spec.left_tail_weight},
          {"partitions", spec.partitions},
          {"scenario_count", spec.scenario_count}};
}

CaseSpec case_from_json(const json& doc) {
  try {
    if (doc.is_string()) return case_preset(doc.get<std::string>());
    CaseSpec spec;
    if (doc.contains("preset")) spec = case_preset(doc.at("preset").get<std::string>());
    spec.label = doc.value("label", spec.label);
    spec.right_tail_prob = doc.value("right_tail_prob", spec.right_tail_prob);
    spec.right_tail_weight = doc.value("right_tail_weight", spec.right_tail_weight);
    spec.left_tail_weight = doc.value("left_tail_weight", spec.left_tail_weight);
    spec.partitions = doc.value("partitions", spec.partitions);
    spec.scenario_count = doc.value("scenario_count", spec.scenario_count);
    validate_case(spec);
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("case spec: ") + e.what());
  }
}

json scenario_set_to_json(const ScenarioSet& set) {
  json scenarios = json::array();
  for (std::size_t w = 0; w < set.scenarios.size(); ++w) {
    const DemandScenario& s = set.scenarios[w];
    json grid = json::array();
    for (int n = 0; n < s.num_regions; ++n) {
      json row = json::array();
      for (int t = 1; t <= s.num_periods; ++t) row.push_back(s.at(n, t));
      grid.push_back(std::move(row));
    }
    scenarios.push_back({{"probability", set.probabilities.at(w)},
                         {"raw_weight", s.raw_weight},
                         {"tail", tail_name(s.tail)},
                         {"partition", s.partition},
                         {"demand", std::move(grid)}});
  }
  return {{"schema_version", 1},
          {"seed", set.seed},
          {"case", case_to_json(set.case_spec)},
          {"horizon",
           {{"start_date", set.horizon.start_date.to_iso()},
            {"num_periods", set.horizon.num_periods}}},
          {"region_ids", set.region_ids},
          {"scenarios", std::move(scenarios)}};
}

ScenarioSet scenario_set_from_json(const json& doc) {
  try {
    if (doc.value("schema_version", 1) != 1) {
      throw InputError("scenario set: unsupported schema_version");
    }
    ScenarioSet set;
    set.seed = doc.at("seed").get<std::uint64_t>();
    set.case_spec = case_from_json(doc.at("case"));
    set.horizon.start_date = Date::parse_iso(doc.at("horizon").at("start_date").get<std::string>());
    set.horizon.num_periods = doc.at("horizon").at("num_periods").get<int>();
    set.region_ids = doc.at("region_ids").get<std::vector<std::string>>();
    double total = 0.0;
    for (const json& entry : doc.at("scenarios")) {
      DemandScenario s;
      s.num_regions = set.num_regions();
      s.num_periods = set.num_periods();
      s.raw_weight = entry.at("raw_weight").get<double>();
      s.tail = tail_from_name(entry.at("tail").get<std::string>());
      s.partition = entry.at("partition").get<int>();
      const json& grid = entry.at("demand");
      if (grid.size() != set.region_ids.size()) {
        throw InputError("scenario set: demand grid has " + std::to_string(grid.size()) +
                         " rows for " + std::to_string(set.region_ids.size()) + " regions");
      }
      for (const json& row : grid) {
        if (static_cast<int>(row.size()) != s.num_periods) {
          throw InputError("scenario set: demand row length does not match the horizon");
        }
        for (const json& v : row) {
          const double d = v.get<double>();
          if (!(d >= 0.0) || !std::isfinite(d)) {
            throw InputError("scenario set: demand values must be finite and >= 0");
          }
          s.demand.push_back(d);
        }
      }
      const double p = entry.at("probability").get<double>();
      if (!(p > 0.0 && p <= 1.0)) throw InputError("scenario set: probability outside (0,1]");
      total += p;
      set.probabilities.push_back(p);
      set.scenarios.push_back(std::move(s));
    }
    if (set.scenarios.empty()) throw InputError("scenario set: no scenarios");
    if (std::abs(total - 1.0) > 1e-9) {
      throw InputError("scenario set: probabilities sum to " + std::to_string(total));
    }
    return set;
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario set: ") + e.what());
  }
}

ScenarioSet load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  try {
    return scenario_set_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError("scenario file '" + path + "': " + e.what());
  }
}

}  // namespace ventalloc
