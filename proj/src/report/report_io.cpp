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

#include "ventalloc/report/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

using nlohmann::json;

std::string csv_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Region-major grid as an array of per-region arrays.
json grid_to_json(const std::vector<double>& cells, int rows, int width) {
  json out = json::array();
  for (int r = 0; r < rows; ++r) {
    out.push_back(std::vector<double>(cells.begin() + static_cast<std::ptrdiff_t>(r) * width,
                                      cells.begin() + static_cast<std::ptrdiff_t>(r + 1) * width));
  }
  return out;
}

std::vector<double> grid_from_json(const json& doc, int rows, int width, const char* what) {
  std::vector<double> cells;
  if (!doc.is_array() || static_cast<int>(doc.size()) != rows) {
    throw InputError(std::string("plan grid '") + what + "' has the wrong number of regions");
  }
  for (const json& row : doc) {
    if (!row.is_array() || static_cast<int>(row.size()) != width) {
      throw InputError(std::string("plan grid '") + what + "' has the wrong number of periods");
    }
    for (const json& v : row) cells.push_back(v.get<double>());
  }
  return cells;
}

json limits_to_json(const SolveLimits& limits) {
  json out = {{"time_limit_seconds", limits.time_limit_seconds},
              {"relative_gap", limits.relative_gap},
              {"absolute_gap", limits.absolute_gap}};
  out["node_limit"] = limits.node_limit ? json(*limits.node_limit) : json(nullptr);
  return out;
}

SolveLimits limits_from_json(const json& doc) {
  SolveLimits limits;
  limits.time_limit_seconds = doc.at("time_limit_seconds").get<double>();
  limits.relative_gap = doc.at("relative_gap").get<double>();
  limits.absolute_gap = doc.at("absolute_gap").get<double>();
  if (doc.contains("node_limit") && !doc.at("node_limit").is_null()) {
    limits.node_limit = doc.at("node_limit").get<std::int64_t>();
  }
  return limits;
}

json plan_to_json(const ScenarioPlan& plan, double probability) {
  const int N = plan.num_regions;
  const int T = plan.num_periods;
  json out = {{"index", plan.scenario},
              {"probability", probability},
              {"status", status_name(plan.solve.status)},
              {"node_count", plan.solve.node_count},
              {"objective", plan.shortage_sum()}};
  out["best_bound"] = plan.solve.best_bound ? json(*plan.solve.best_bound) : json(nullptr);
  out["plan"] = {{"x", grid_to_json(plan.x, N, T)}, {"z", grid_to_json(plan.z, N, T)},
                 {"e", grid_to_json(plan.e, N, T)}, {"g", grid_to_json(plan.g, N, T)},
                 {"y", grid_to_json(plan.y, N, T + 1)}, {"s", plan.s}};
  return out;
}

ScenarioPlan plan_from_json(const json& doc, int N, int T) {
  ScenarioPlan plan;
  plan.scenario = doc.at("index").get<int>();
  plan.num_regions = N;
  plan.num_periods = T;
  plan.solve.status = status_from_name(doc.at("status").get<std::string>());
  plan.solve.node_count = doc.at("node_count").get<std::int64_t>();
  if (!doc.at("best_bound").is_null()) plan.solve.best_bound = doc.at("best_bound").get<double>();
  const json& grids = doc.at("plan");
  plan.x = grid_from_json(grids.at("x"), N, T, "x");
  plan.z = grid_from_json(grids.at("z"), N, T, "z");
  plan.e = grid_from_json(grids.at("e"), N, T, "e");
  plan.g = grid_from_json(grids.at("g"), N, T, "g");
  plan.y = grid_from_json(grids.at("y"), N, T + 1, "y");
  plan.s = grids.at("s").get<std::vector<double>>();
  if (static_cast<int>(plan.s.size()) != T + 1) throw InputError("plan grid 's' has the wrong length");
  return plan;
}

}  // namespace

std::string_view strategy_name(SolveStrategy strategy) {
  return strategy == SolveStrategy::kPerScenario ? "per_scenario" : "monolithic";
}

SolveStrategy strategy_from_name(std::string_view name) {
  if (name == "per_scenario") return SolveStrategy::kPerScenario;
  if (name == "monolithic") return SolveStrategy::kMonolithic;
  throw InputError("unknown strategy '" + std::string(name) + "'");
}

ReportBundle make_report(const PlanningInstance& instance, const ScenarioSet& scenarios,
                         std::vector<ScenarioPlan> plans, SolveStrategy strategy,
                         const SolveLimits& limits, BigMPolicy big_m, RunTiming timing) {
  ReportBundle report;
  report.instance = instance;
  report.seed = scenarios.seed;
  report.case_spec = scenarios.case_spec;
  report.strategy = strategy;
  report.limits = limits;
  report.big_m = big_m;
  report.probabilities = scenarios.probabilities;
  report.plans = std::move(plans);
  report.timing = std::move(timing);
  std::vector<std::string> ids;
  for (const Region& r : instance.regions) ids.push_back(r.id);
  report.shortage = summarize_shortage(report.plans, report.probabilities, instance.horizon, ids);
  report.flows = summarize_flows(report.plans, report.probabilities, ids);
  return report;
}

json report_to_json(const ReportBundle& report, bool include_timing) {
  const ShortageReport& sh = report.shortage;
  json daily = json::array();
  for (std::size_t t = 0; t < sh.daily_expected_shortage.size(); ++t) {
    const int period = static_cast<int>(t) + 1;
    daily.push_back({{"period", period},
                     {"date", report.instance.horizon.date_of(period).to_iso()},
                     {"value", sh.daily_expected_shortage[t]}});
  }
  json flow_rows = json::array();
  for (const FlowRow& row : report.flows.rows) {
    flow_rows.push_back({{"region", row.region_id},
                         {"total_inflow", row.total_inflow},
                         {"total_outflow", row.total_outflow},
                         {"net_flow", row.net_flow}});
  }
  json scenarios = json::array();
  for (std::size_t w = 0; w < report.plans.size(); ++w) {
    scenarios.push_back(plan_to_json(report.plans[w], report.probabilities[w]));
  }
  json doc = {
      {"schema_version", ReportBundle::kSchemaVersion},
      {"metadata",
       {{"seed", report.seed},
        {"case", case_to_json(report.case_spec)},
        {"strategy", strategy_name(report.strategy)},
        {"big_m_policy", big_m_policy_name(report.big_m)},
        {"limits", limits_to_json(report.limits)},
        {"instance", instance_to_json(report.instance)}}},
      {"shortage",
       {{"total", sh.total},
        {"worst_day",
         {{"value", sh.worst_day.value},
          {"period", sh.worst_day.period},
          {"date", sh.worst_day.date.to_iso()}}},
        {"worst_day_state",
         {{"value", sh.worst_day_state.value},
          {"period", sh.worst_day_state.period},
          {"date", sh.worst_day_state.date.to_iso()},
          {"region", sh.worst_day_state.region_id}}},
        {"daily_expected_shortage", daily},
        {"scenario_objectives", sh.scenario_objectives}}},
      {"flows", flow_rows},
      {"scenarios", scenarios}};
  if (include_timing) {
    doc["timing"] = {{"total_seconds", report.timing.total_seconds},
                     {"scenario_seconds", report.timing.scenario_seconds}};
  }
  return doc;
}

ReportBundle report_from_json(const json& doc) {
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != ReportBundle::kSchemaVersion) {
      throw InputError("unsupported report schema_version " + std::to_string(version));
    }
    ReportBundle report;
    const json& meta = doc.at("metadata");
    report.seed = meta.at("seed").get<std::uint64_t>();
    report.case_spec = case_from_json(meta.at("case"));
    report.strategy = strategy_from_name(meta.at("strategy").get<std::string>());
    report.big_m = big_m_policy_from_name(meta.at("big_m_policy").get<std::string>());
    report.limits = limits_from_json(meta.at("limits"));
    report.instance = instance_from_json(meta.at("instance"));
    const int N = report.instance.num_regions();
    const int T = report.instance.num_periods();

    const json& sh = doc.at("shortage");
    ShortageReport& shortage = report.shortage;
    shortage.total = sh.at("total").get<double>();
    const json& wd = sh.at("worst_day");
    shortage.worst_day = {wd.at("value").get<double>(), wd.at("period").get<int>(),
                          Date::parse_iso(wd.at("date").get<std::string>())};
    const json& wds = sh.at("worst_day_state");
    shortage.worst_day_state = {wds.at("value").get<double>(), wds.at("period").get<int>(),
                                Date::parse_iso(wds.at("date").get<std::string>()),
                                wds.at("region").get<std::string>()};
    for (const json& day : sh.at("daily_expected_shortage")) {
      shortage.daily_expected_shortage.push_back(day.at("value").get<double>());
    }
    shortage.scenario_objectives = sh.at("scenario_objectives").get<std::vector<double>>();

    for (const json& row : doc.at("flows")) {
      report.flows.rows.push_back({row.at("region").get<std::string>(),
                                   row.at("total_inflow").get<double>(),
                                   row.at("total_outflow").get<double>(),
                                   row.at("net_flow").get<double>()});
    }
    for (const json& entry : doc.at("scenarios")) {
      report.probabilities.push_back(entry.at("probability").get<double>());
      report.plans.push_back(plan_from_json(entry, N, T));
    }
    if (doc.contains("timing")) {
      const json& timing = doc.at("timing");
      report.timing.total_seconds = timing.at("total_seconds").get<double>();
      report.timing.scenario_seconds = timing.at("scenario_seconds").get<std::vector<double>>();
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

void emit_report(const ReportBundle& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kJson) {
    out << report_to_json(report).dump(2) << '\n';
    return;
  }
  out << "region,total_inflow,total_outflow,net_flow\n";
  for (const FlowRow& row : report.flows.rows) {
    out << csv_field(row.region_id) << ',' << csv_number(row.total_inflow) << ','
        << csv_number(row.total_outflow) << ',' << csv_number(row.net_flow) << '\n';
  }
}

std::string emit_report(const ReportBundle& report, ReportFormat format) {
  std::ostringstream out;
  emit_report(report, format, out);
  return out.str();
}

ReportBundle parse_report(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(doc);
}

ReportBundle load_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open report file " + path);
  return parse_report(in);
}

void write_daily_shortage_csv(const ReportBundle& report, std::ostream& out) {
  out << "date,period,expected_shortage\n";
  const auto& curve = report.shortage.daily_expected_shortage;
  for (std::size_t t = 0; t < curve.size(); ++t) {
    const int period = static_cast<int>(t) + 1;
    out << report.instance.horizon.date_of(period).to_iso() << ',' << period << ','
        << csv_number(curve[t]) << '\n';
  }
}

}  // namespace ventalloc
