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
#include <sstream>

#include "ventalloc/common/error.hpp"
#include "ventalloc/instance/instance.hpp"

namespace ventalloc {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::int64_t as_count(const json& value, const std::string& where) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float()) {
    const double v = value.get<double>();
    if (std::isfinite(v) && std::floor(v) == v) return static_cast<std::int64_t>(v);
  }
  throw InputError(where + ": expected an integer, got " + value.dump());
}

double as_real(const json& value, const std::string& where) {
  if (!value.is_number()) throw InputError(where + ": expected a number, got " + value.dump());
  return value.get<double>();
}

double rate_field(const json& region, const json& defaults, const char* key,
                  const std::string& where) {
  if (region.contains(key)) return as_real(region.at(key), where + "." + key);
  if (defaults.is_object() && defaults.contains(key)) {
    return as_real(defaults.at(key), std::string("defaults.") + key);
  }
  throw InputError(where + ": missing field '" + key + "' and no default given");
}

PlanningInstance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  if (doc.contains("schema_version") && doc.at("schema_version") != 1) {
    throw InputError("instance: unsupported schema_version " + doc.at("schema_version").dump());
  }
  PlanningInstance out;
  const json& horizon = require(doc, "horizon", "instance");
  out.horizon.start_date =
      Date::parse_iso(require(horizon, "start_date", "horizon").get<std::string>());
  out.horizon.num_periods =
      static_cast<int>(as_count(require(horizon, "num_periods", "horizon"), "horizon.num_periods"));
  out.central_initial = as_count(require(doc, "central_initial", "instance"), "central_initial");

  const json& production = require(doc, "production", "instance");
  if (production.is_array()) {
    for (std::size_t t = 0; t < production.size(); ++t) {
      out.production.push_back(as_count(production[t], "production[" + std::to_string(t) + "]"));
    }
  } else if (production.is_object()) {
    ProductionRamp ramp;
    ramp.base_per_day = as_count(require(production, "base_per_day", "production"),
                                 "production.base_per_day");
    ramp.ramped_per_day = as_count(require(production, "ramped_per_day", "production"),
                                   "production.ramped_per_day");
    ramp.ramp_date =
        Date::parse_iso(require(production, "ramp_date", "production").get<std::string>());
    out.production = production_schedule(out.horizon, ramp);
  } else {
    throw InputError("production: expected an array or a ramp object");
  }

  const json defaults = doc.value("defaults", json::object());
  const json& regions = require(doc, "regions", "instance");
  if (!regions.is_array()) throw InputError("regions: expected an array");
  for (std::size_t n = 0; n < regions.size(); ++n) {
    const json& r = regions[n];
    const std::string where = "regions[" + std::to_string(n) + "]";
    Region region;
    region.id = require(r, "id", where).get<std::string>();
    region.display_name = r.value("display_name", region.id);
    out.regions.push_back(region);
    out.initial_region_inventory.push_back(
        as_count(require(r, "initial_inventory", where), where + ".initial_inventory"));
    out.gamma.push_back(rate_field(r, defaults, "gamma", where));
    out.tau.push_back(rate_field(r, defaults, "tau", where));
    out.rho.push_back(rate_field(r, defaults, "rho", where));
  }
  return out;
}

}  // namespace

PlanningInstance instance_from_json(const json& doc) {
  try {
    return parse_instance(doc);
  } catch (const json::exception& e) {
    throw InputError(std::string("instance: ") + e.what());
  }
}

json instance_to_json(const PlanningInstance& instance) {
  json regions = json::array();
  for (int n = 0; n < instance.num_regions(); ++n) {
    regions.push_back({{"id", instance.regions[n].id},
                       {"display_name", instance.regions[n].display_name},
                       {"initial_inventory", instance.initial_region_inventory.at(n)},
                       {"gamma", instance.gamma.at(n)},
                       {"tau", instance.tau.at(n)},
                       {"rho", instance.rho.at(n)}});
  }
  return {{"schema_version", 1},
          {"horizon",
           {{"start_date", instance.horizon.start_date.to_iso()},
            {"num_periods", instance.horizon.num_periods}}},
          {"central_initial", instance.central_initial},
          {"production", instance.production},
          {"regions", std::move(regions)}};
}

PlanningInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("instance file '" + path + "': " + e.what());
  }
  return validate_instance(instance_from_json(doc));
}

}  // namespace ventalloc
