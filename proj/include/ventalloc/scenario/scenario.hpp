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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ventalloc/instance/instance.hpp"
#include "ventalloc/scenario/forecast.hpp"

namespace ventalloc {

enum class Tail { kLeft, kRight };

std::string_view tail_name(Tail tail);
Tail tail_from_name(std::string_view name);

// Tail-weighted sampling scheme. A scenario draws the right tail with
// probability `right_tail_prob`; its raw weight is the weight of the tail it
// drew, and probabilities are the normalized raw weights.
struct CaseSpec {
  std::string label = "custom";
  double right_tail_prob = 0.5;
  double right_tail_weight = 1.0;
  double left_tail_weight = 1.0;
  int partitions = 50;
  int scenario_count = 24;

  bool operator==(const CaseSpec&) const = default;
};

// Presets "I" (average, equal weights), "II" (average, right tail 0.25),
// "III" (worse than average, right tail 0.5) and "IV" (severe, right tail
// 0.75). Throws InputError for any other label.
CaseSpec case_preset(std::string_view label);
std::vector<CaseSpec> case_presets();
void validate_case(const CaseSpec& spec);

nlohmann::json case_to_json(const CaseSpec& spec);
CaseSpec case_from_json(const nlohmann::json& doc);

// Seeded generator with a fixed, portable output mapping: std::mt19937_64
// (whose sequence is pinned by the standard), 53-bit mantissa fill for unit
// reals, and rejection sampling for bounded integers. Avoids the
// implementation-defined std:: distributions.
class ScenarioRng {
 public:
  explicit ScenarioRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double unit();
  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Value in the k-th of `partitions` equal-width slices of one tail of the
// interval: the left tail spans [lower, mean], the right tail [mean, upper].
// Returns tail_start + (k + u) * tail_width / partitions.
double sample_tail_partition(double lower, double mean, double upper, Tail tail, int k,
                             int partitions, double u);

// Demands for every (region, period) cell. Storage is region-major with
// 1-based periods: at(n, t) for n in [0, N), t in [1, T].
struct DemandScenario {
  int num_regions = 0;
  int num_periods = 0;
  std::vector<double> demand;
  double raw_weight = 1.0;
  Tail tail = Tail::kLeft;
  int partition = 0;

  double at(int n, int t) const { return demand[static_cast<std::size_t>(n) * num_periods + t - 1]; }
  double& at(int n, int t) { return demand[static_cast<std::size_t>(n) * num_periods + t - 1]; }

  bool operator==(const DemandScenario&) const = default;
};

struct ScenarioSet {
  std::vector<std::string> region_ids;
  Horizon horizon;
  CaseSpec case_spec;
  std::uint64_t seed = 0;
  std::vector<DemandScenario> scenarios;
  std::vector<double> probabilities;

  int size() const { return static_cast<int>(scenarios.size()); }
  int num_regions() const { return static_cast<int>(region_ids.size()); }
  int num_periods() const { return horizon.num_periods; }

  // Builds a set from explicit demand grids (each region-major, N * T values)
  // and raw weights; probabilities are the normalized weights.
  static ScenarioSet from_demands(std::vector<std::string> region_ids, Horizon horizon,
                                  const std::vector<std::vector<double>>& demands,
                                  const std::vector<double>& raw_weights);

  bool operator==(const ScenarioSet&) const = default;
};

// p = w / sum(w). Throws InputError on an empty list or a weight <= 0.
std::vector<double> normalize_weights(std::span<const double> raw_weights);

// Draws `spec.scenario_count` scenarios. Per scenario: the tail (right with
// probability spec.right_tail_prob), then the partition index, then one unit
// draw per cell in region-major, period-ascending order. Every cell of a
// scenario uses the same tail and partition. Pure function of its arguments.
ScenarioSet generate_scenarios(const ForecastSet& forecasts, const Horizon& horizon,
                               const CaseSpec& spec, std::uint64_t seed);

// Throws ShapeMismatchError unless `set` covers exactly the instance's
// regions (same ids, same order) and horizon.
void check_compatible(const PlanningInstance& instance, const ScenarioSet& set);

nlohmann::json scenario_set_to_json(const ScenarioSet& set);
ScenarioSet scenario_set_from_json(const nlohmann::json& doc);
ScenarioSet load_scenario_file(const std::string& path);

}  // namespace ventalloc
