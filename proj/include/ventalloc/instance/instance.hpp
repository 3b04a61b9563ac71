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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ventalloc/common/date.hpp"

namespace ventalloc {

struct Region {
  std::string id;
  std::string display_name;

  bool operator==(const Region&) const = default;
};

// Planning periods are t = 1..num_periods; t = 0 is the initial state.
struct Horizon {
  Date start_date;
  int num_periods = 0;

  // Calendar day of period t (t = 1 is start_date).
  Date date_of(int t) const { return start_date.plus_days(t - 1); }
  // Inverse of date_of; nullopt when the date falls outside 1..num_periods.
  std::optional<int> period_of(const Date& date) const;

  bool operator==(const Horizon&) const = default;
};

// Deterministic inputs of the allocation model. Per-region vectors are
// indexed like `regions`; `production[t - 1]` holds Q_t.
struct PlanningInstance {
  std::vector<Region> regions;
  Horizon horizon;
  std::vector<std::int64_t> initial_region_inventory;  // Y_n
  std::int64_t central_initial = 0;                    // I
  std::vector<std::int64_t> production;                // Q_t
  std::vector<double> gamma;  // unusable fraction of Y_n
  std::vector<double> tau;    // shareable fraction of the usable inventory
  std::vector<double> rho;    // safety-stock multiplier on same-day demand

  int num_regions() const { return static_cast<int>(regions.size()); }
  int num_periods() const { return horizon.num_periods; }

  // y_{n,0} = (1 - gamma_n) * Y_n.
  double usable_initial(int n) const;
  // Q_1 + ... + Q_t.
  double cumulative_production(int t) const;
  // Total units in the system at the end of period t when nothing is lost:
  // sum_n y_{n,0} + I + cumulative_production(t).
  double system_units(int t) const;

  std::optional<int> region_index(std::string_view id) const;

  bool operator==(const PlanningInstance&) const = default;
};

// Returns `raw` unchanged when every invariant holds; otherwise throws a
// ValidationError listing every violation.
PlanningInstance validate_instance(PlanningInstance raw);

double usable_initial_inventory(std::int64_t inventory, double gamma);

// Sum of Q_1..Q_t. Throws std::out_of_range unless 1 <= t <= Q.size().
double cumulative_production(std::span<const std::int64_t> production, int t);

// Piecewise-constant production: `base_per_day` before `ramp_date`,
// `ramped_per_day` on and after it.
struct ProductionRamp {
  std::int64_t base_per_day = 100;
  std::int64_t ramped_per_day = 300;
  Date ramp_date = Date(2020, 4, 15);
};
std::vector<std::int64_t> production_schedule(const Horizon& horizon, const ProductionRamp& ramp);

// Defaults of the US ventilator case study: 70 days from 2020-03-23, a
// 20,000-unit central stockpile, 100/day production rising to 300/day on
// 2020-04-15, and rho = 1.5 for every region.
namespace case_study {
inline constexpr std::int64_t kCentralStockpile = 20000;
inline constexpr double kRho = 1.5;
inline constexpr int kHorizonDays = 70;
Horizon horizon();
}  // namespace case_study

// JSON codec. Parsing throws InputError for structural problems (missing
// fields, non-integer counts); range checks are left to validate_instance.
PlanningInstance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const PlanningInstance& instance);
PlanningInstance load_instance_file(const std::string& path);

}  // namespace ventalloc
