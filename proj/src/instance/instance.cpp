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

#include "ventalloc/instance/instance.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ventalloc/common/error.hpp"

namespace ventalloc {

std::optional<int> Horizon::period_of(const Date& date) const {
  const int t = date.days_since(start_date) + 1;
  if (t < 1 || t > num_periods) return std::nullopt;
  return t;
}

double usable_initial_inventory(std::int64_t inventory, double gamma) {
  return (1.0 - gamma) * static_cast<double>(inventory);
}

double cumulative_production(std::span<const std::int64_t> production, int t) {
  if (t < 1 || t > static_cast<int>(production.size())) {
    throw std::out_of_range("period " + std::to_string(t) + " outside 1.." +
                            std::to_string(production.size()));
  }
  return static_cast<double>(
      std::accumulate(production.begin(), production.begin() + t, std::int64_t{0}));
}

double PlanningInstance::usable_initial(int n) const {
  return usable_initial_inventory(initial_region_inventory.at(n), gamma.at(n));
}

double PlanningInstance::cumulative_production(int t) const {
  return ventalloc::cumulative_production(production, t);
}

double PlanningInstance::system_units(int t) const {
  double units = static_cast<double>(central_initial);
  for (int n = 0; n < num_regions(); ++n) units += usable_initial(n);
  if (t >= 1) units += cumulative_production(t);
  return units;
}

std::optional<int> PlanningInstance::region_index(std::string_view id) const {
  for (int n = 0; n < num_regions(); ++n) {
    if (regions[n].id == id) return n;
  }
  return std::nullopt;
}

PlanningInstance validate_instance(PlanningInstance raw) {
  std::vector<ValidationIssue> issues;
  const std::size_t num_regions = raw.regions.size();
  auto region_label = [&](std::size_t n) {
    return n < num_regions && !raw.regions[n].id.empty() ? "region " + raw.regions[n].id
                                                         : "region #" + std::to_string(n);
  };

  if (raw.regions.empty()) issues.push_back({"regions", "", "at least one region required"});
  std::set<std::string> seen;
  for (std::size_t n = 0; n < num_regions; ++n) {
    const auto& id = raw.regions[n].id;
    if (id.empty()) {
      issues.push_back({"regions.id", region_label(n), "region id must be non-empty"});
    } else if (!seen.insert(id).second) {
      issues.push_back({"regions.id", region_label(n), "duplicate region id"});
    }
  }
  if (raw.horizon.num_periods < 1) {
    issues.push_back({"horizon.num_periods", "", "num_periods must be >= 1"});
  }

  auto check_length = [&](const char* field, std::size_t actual) {
    if (actual != num_regions) {
      issues.push_back({field, "",
                        "per-region vector length mismatch: expected " +
                            std::to_string(num_regions) + ", got " + std::to_string(actual)});
      return false;
    }
    return true;
  };
  if (check_length("initial_region_inventory", raw.initial_region_inventory.size())) {
    for (std::size_t n = 0; n < num_regions; ++n) {
      if (raw.initial_region_inventory[n] < 0) {
        issues.push_back({"initial_region_inventory", region_label(n), "must be >= 0"});
      }
    }
  }
  auto check_rates = [&](const char* field, const std::vector<double>& values, double hi,
                         const char* range) {
    if (!check_length(field, values.size())) return;
    for (std::size_t n = 0; n < num_regions; ++n) {
      const double v = values[n];
      if (!std::isfinite(v) || v < 0.0 || v > hi) {
        issues.push_back({field, region_label(n),
                          std::string(field) + " out of " + range + " (" + std::to_string(v) +
                              ")"});
      }
    }
  };
  check_rates("gamma", raw.gamma, 1.0, "[0,1]");
  check_rates("tau", raw.tau, 1.0, "[0,1]");
  check_rates("rho", raw.rho, std::numeric_limits<double>::infinity(), "[0,inf)");

  if (raw.central_initial < 0) issues.push_back({"central_initial", "", "must be >= 0"});
  if (raw.horizon.num_periods >= 1 &&
      raw.production.size() != static_cast<std::size_t>(raw.horizon.num_periods)) {
    issues.push_back({"production", "",
                      "production vector length mismatch: expected " +
                          std::to_string(raw.horizon.num_periods) + ", got " +
                          std::to_string(raw.production.size())});
  }
  for (std::size_t t = 0; t < raw.production.size(); ++t) {
    if (raw.production[t] < 0) {
      issues.push_back({"production", "period " + std::to_string(t + 1), "must be >= 0"});
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return raw;
}

std::vector<std::int64_t> production_schedule(const Horizon& horizon,
                                              const ProductionRamp& ramp) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(std::max(horizon.num_periods, 0)));
  for (int t = 1; t <= horizon.num_periods; ++t) {
    q[t - 1] = horizon.date_of(t) < ramp.ramp_date ? ramp.base_per_day : ramp.ramped_per_day;
  }
  return q;
}

namespace case_study {
Horizon horizon() { return Horizon{Date(2020, 3, 23), kHorizonDays}; }
}  // namespace case_study

}  // namespace ventalloc
