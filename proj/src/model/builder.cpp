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

#include "ventalloc/model/builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ventalloc/common/error.hpp"
#include "ventalloc/model/names.hpp"

namespace ventalloc {
namespace {

class BlockBuilder {
 public:
  BlockBuilder(const PlanningInstance& instance, const ScenarioSet& scenarios,
               const BuildOptions& options, MilpModel& model)
      : instance_(instance), scenarios_(scenarios), options_(options), model_(model) {}

  void add_columns(int w, double weight) {
    const auto& dir = *model_.directory();
    const int first = model_.num_columns();
    for (int j = 0; j < dir.block_size(); ++j) {
      const VariableKey key = dir.key_of(first + j);
      if (key.scenario != w) throw std::logic_error("directory/column order mismatch");
      Column col;
      col.name = encode_column_name(key, scenarios_.region_ids);
      if (key.kind == VarKind::kE) col.objective = weight;
      if (key.kind == VarKind::kG) {
        col.binary = true;
        col.upper = 1.0;
      }
      model_.add_column(std::move(col));
    }
  }

  void add_rows(int w) {
    const int N = instance_.num_regions();
    const int T = instance_.num_periods();
    const DemandScenario& demand = scenarios_.scenarios.at(static_cast<std::size_t>(w));
    auto col = [&](VarKind kind, std::optional<int> n, int t) {
      return model_.column(VariableKey{kind, n, t, w});
    };

    for (int t = 1; t <= T; ++t) {
      const double q = static_cast<double>(instance_.production[t - 1]);
      for (int n = 0; n < N; ++n) {
        add({RowKind::kRegionBalance, n, t, w},
            {{col(VarKind::kY, n, t - 1), 1.0},
             {col(VarKind::kX, n, t), 1.0},
             {col(VarKind::kZ, n, t), -1.0},
             {col(VarKind::kY, n, t), -1.0}},
            Sense::kEqual, 0.0);
      }
      {
        Terms terms{{col(VarKind::kS, std::nullopt, t - 1), 1.0},
                    {col(VarKind::kS, std::nullopt, t), -1.0}};
        for (int n = 0; n < N; ++n) {
          terms.push_back({col(VarKind::kZ, n, t), 1.0});
          terms.push_back({col(VarKind::kX, n, t), -1.0});
        }
        add({RowKind::kCentralBalance, std::nullopt, t, w}, std::move(terms), Sense::kEqual, -q);
      }
      for (int n = 0; n < N; ++n) {
        const double keep = 1.0 - instance_.tau[n];
        const double safety = instance_.rho[n] * demand.at(n, t);
        const double m = big_m(n, t, demand);
        const int y = col(VarKind::kY, n, t);
        const int y0 = col(VarKind::kY, n, 0);
        const int z = col(VarKind::kZ, n, t);
        const int g = col(VarKind::kG, n, t);
        add({RowKind::kSafetyActivation, n, t, w}, {{y, 1.0}, {y0, -keep}, {g, -m}},
            Sense::kGreaterEqual, safety - m);
        add({RowKind::kSafetyCap, n, t, w}, {{z, 1.0}, {y, -1.0}, {y0, keep}, {g, m}},
            Sense::kLessEqual, m - safety);
        add({RowKind::kOutflowIndicator, n, t, w}, {{z, 1.0}, {g, -m}}, Sense::kLessEqual, 0.0);
      }
      {
        Terms terms{{col(VarKind::kS, std::nullopt, t - 1), -1.0}};
        for (int n = 0; n < N; ++n) {
          terms.push_back({col(VarKind::kX, n, t), 1.0});
          terms.push_back({col(VarKind::kZ, n, t), -1.0});
        }
        add({RowKind::kCentralOutflowCap, std::nullopt, t, w}, std::move(terms), Sense::kLessEqual,
            q);
      }
      for (int n = 0; n < N; ++n) {
        add({RowKind::kShortage, n, t, w},
            {{col(VarKind::kE, n, t), 1.0}, {col(VarKind::kY, n, t), 1.0}}, Sense::kGreaterEqual,
            demand.at(n, t));
      }
    }
    for (int n = 0; n < N; ++n) {
      add({RowKind::kRegionInitial, n, 0, w}, {{col(VarKind::kY, n, 0), 1.0}}, Sense::kEqual,
          instance_.usable_initial(n));
    }
    add({RowKind::kCentralInitial, std::nullopt, 0, w}, {{col(VarKind::kS, std::nullopt, 0), 1.0}},
        Sense::kEqual, static_cast<double>(instance_.central_initial));
  }

 private:
  using Terms = std::vector<std::pair<int, double>>;

  double big_m(int n, int t, const DemandScenario& demand) const {
    const double published = compute_big_m(instance_, n, t);
    if (options_.big_m == BigMPolicy::kPublished) return published;
    const double floor =
        (1.0 - instance_.tau[n]) * instance_.usable_initial(n) + instance_.rho[n] * demand.at(n, t);
    return std::max({published, instance_.system_units(t), floor});
  }

  void add(const RowTag& tag, Terms terms, Sense sense, double rhs) {
    Row row;
    row.tag = tag;
    row.name = encode_row_name(tag, scenarios_.region_ids);
    row.sense = sense;
    row.rhs = rhs;
    for (const auto& [c, v] : terms) {
      if (v == 0.0) continue;
      row.columns.push_back(c);
      row.coefficients.push_back(v);
    }
    model_.add_row(std::move(row));
  }

  const PlanningInstance& instance_;
  const ScenarioSet& scenarios_;
  const BuildOptions& options_;
  MilpModel& model_;
};

MilpModel build_blocks(const PlanningInstance& instance, const ScenarioSet& scenarios,
                       const std::vector<int>& which, bool weighted, const BuildOptions& options) {
  check_compatible(instance, scenarios);
  MilpModel model;
  model.set_region_ids(scenarios.region_ids);
  model.set_directory(VariableDirectory(instance.num_regions(), instance.num_periods(), which));
  BlockBuilder builder(instance, scenarios, options, model);
  for (int w : which) {
    builder.add_columns(w, weighted ? scenarios.probabilities.at(static_cast<std::size_t>(w)) : 1.0);
  }
  for (int w : which) builder.add_rows(w);
  return model;
}

}  // namespace

std::string_view big_m_policy_name(BigMPolicy policy) {
  return policy == BigMPolicy::kPublished ? "published" : "system_bound";
}

BigMPolicy big_m_policy_from_name(std::string_view name) {
  if (name == "published") return BigMPolicy::kPublished;
  if (name == "system_bound") return BigMPolicy::kSystemBound;
  throw InputError("unknown big-M policy '" + std::string(name) + "'");
}

double compute_big_m(const PlanningInstance& instance, int n, int t) {
  return static_cast<double>(instance.central_initial) +
         instance.tau.at(n) * instance.usable_initial(n) + instance.cumulative_production(t);
}

int columns_per_scenario(int num_regions, int num_periods) {
  return num_regions * (num_periods + 1) + (num_periods + 1) + 4 * num_regions * num_periods;
}

int rows_per_scenario(int num_regions, int num_periods) {
  return 5 * num_regions * num_periods + 2 * num_periods + num_regions + 1;
}

MilpModel build_extensive_form(const PlanningInstance& instance, const ScenarioSet& scenarios,
                               const BuildOptions& options) {
  std::vector<int> all(static_cast<std::size_t>(scenarios.size()));
  std::iota(all.begin(), all.end(), 0);
  return build_blocks(instance, scenarios, all, true, options);
}

MilpModel single_scenario_model(const PlanningInstance& instance, const ScenarioSet& scenarios,
                                int scenario, const BuildOptions& options) {
  if (scenario < 0 || scenario >= scenarios.size()) {
    throw std::out_of_range("scenario " + std::to_string(scenario) + " not in the set");
  }
  return build_blocks(instance, scenarios, {scenario}, false, options);
}

std::vector<BigMBinding> audit_big_m(const MilpModel& model, std::span<const double> values,
                                     double tol) {
  std::vector<BigMBinding> out;
  for (int i = 0; i < model.num_rows(); ++i) {
    const Row& row = model.rows()[i];
    if (!row.tag) continue;
    if (row.tag->kind != RowKind::kOutflowIndicator && row.tag->kind != RowKind::kSafetyActivation) {
      continue;
    }
    double m = 0.0;
    double g = 0.0;
    bool has_indicator = false;
    for (std::size_t k = 0; k < row.columns.size(); ++k) {
      if (model.columns()[row.columns[k]].binary) {
        m = -row.coefficients[k];
        g = values[row.columns[k]];
        has_indicator = true;
      }
    }
    if (!has_indicator) continue;
    const double slack = row.tag->kind == RowKind::kOutflowIndicator
                             ? row.rhs - model.row_activity(i, values)
                             : model.row_activity(i, values) - row.rhs;
    const bool indicator_binding = row.tag->kind == RowKind::kOutflowIndicator && g > 0.5;
    const bool activation_binding = row.tag->kind == RowKind::kSafetyActivation && g < 0.5;
    if ((indicator_binding || activation_binding) && slack <= tol) {
      out.push_back({*row.tag, m, slack});
    }
  }
  return out;
}

}  // namespace ventalloc
