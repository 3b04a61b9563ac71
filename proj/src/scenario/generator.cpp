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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ventalloc/common/error.hpp"
#include "ventalloc/scenario/scenario.hpp"

namespace ventalloc {

std::string_view tail_name(Tail tail) { return tail == Tail::kRight ? "right" : "left"; }

Tail tail_from_name(std::string_view name) {
  if (name == "right") return Tail::kRight;
  if (name == "left") return Tail::kLeft;
  throw InputError("unknown tail '" + std::string(name) + "'");
}

CaseSpec case_preset(std::string_view label) {
  CaseSpec spec;
  spec.label = std::string(label);
  if (label == "I") {
    spec.right_tail_prob = 0.5;
    spec.right_tail_weight = 1.0;
    spec.left_tail_weight = 1.0;
  } else if (label == "II") {
    spec.right_tail_prob = 0.25;
    spec.right_tail_weight = 0.25;
    spec.left_tail_weight = 0.75;
  } else if (label == "III") {
    spec.right_tail_prob = 0.5;
    spec.right_tail_weight = 0.5;
    spec.left_tail_weight = 0.5;
  } else if (label == "IV") {
    spec.right_tail_prob = 0.75;
    spec.right_tail_weight = 0.75;
    spec.left_tail_weight = 0.25;
  } else {
    throw InputError("unknown case preset '" + std::string(label) + "' (expected I, II, III or IV)");
  }
  return spec;
}

std::vector<CaseSpec> case_presets() {
  return {case_preset("I"), case_preset("II"), case_preset("III"), case_preset("IV")};
}

void validate_case(const CaseSpec& spec) {
  std::vector<ValidationIssue> issues;
  if (!(spec.right_tail_prob >= 0.0 && spec.right_tail_prob <= 1.0)) {
    issues.push_back({"right_tail_prob", "", "must lie in [0,1]"});
  }
  if (!(spec.right_tail_weight > 0.0) || !std::isfinite(spec.right_tail_weight)) {
    issues.push_back({"right_tail_weight", "", "must be positive"});
  }
  if (!(spec.left_tail_weight > 0.0) || !std::isfinite(spec.left_tail_weight)) {
    issues.push_back({"left_tail_weight", "", "must be positive"});
  }
  if (spec.partitions < 1) issues.push_back({"partitions", "", "must be >= 1"});
  if (spec.scenario_count < 1) issues.push_back({"scenario_count", "", "must be >= 1"});
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

double ScenarioRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t ScenarioRng::index(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
  std::uint64_t draw = engine_();
  while (draw > limit) draw = engine_();
  return draw % n;
}

double sample_tail_partition(double lower, double mean, double upper, Tail tail, int k,
                             int partitions, double u) {
  const double start = tail == Tail::kRight ? mean : lower;
  const double width = tail == Tail::kRight ? upper - mean : mean - lower;
  if (width <= 0.0) return start;
  const double value = start + (static_cast<double>(k) + u) * (width / partitions);
  return std::clamp(value, lower, upper);
}

std::vector<double> normalize_weights(std::span<const double> raw_weights) {
  if (raw_weights.empty()) throw InputError("normalize_weights: empty weight list");
  double total = 0.0;
  for (std::size_t i = 0; i < raw_weights.size(); ++i) {
    if (!(raw_weights[i] > 0.0) || !std::isfinite(raw_weights[i])) {
      throw InputError("normalize_weights: weight " + std::to_string(i) + " is not positive");
    }
    total += raw_weights[i];
  }
  std::vector<double> p(raw_weights.size());
  std::transform(raw_weights.begin(), raw_weights.end(), p.begin(),
                 [total](double w) { return w / total; });
  return p;
}

ScenarioSet ScenarioSet::from_demands(std::vector<std::string> region_ids, Horizon horizon,
                                      const std::vector<std::vector<double>>& demands,
                                      const std::vector<double>& raw_weights) {
  if (demands.size() != raw_weights.size()) {
    throw InputError("from_demands: " + std::to_string(demands.size()) + " demand grids but " +
                     std::to_string(raw_weights.size()) + " weights");
  }
  ScenarioSet set;
  set.horizon = horizon;
  set.region_ids = std::move(region_ids);
  const std::size_t cells = set.region_ids.size() * static_cast<std::size_t>(horizon.num_periods);
  for (std::size_t w = 0; w < demands.size(); ++w) {
    if (demands[w].size() != cells) {
      throw InputError("from_demands: scenario " + std::to_string(w) + " has " +
                       std::to_string(demands[w].size()) + " cells, expected " +
                       std::to_string(cells));
    }
    DemandScenario s;
    s.num_regions = set.num_regions();
    s.num_periods = horizon.num_periods;
    s.demand = demands[w];
    s.raw_weight = raw_weights[w];
    set.scenarios.push_back(std::move(s));
  }
  set.probabilities = normalize_weights(raw_weights);
  set.case_spec.scenario_count = static_cast<int>(demands.size());
  return set;
}

ScenarioSet generate_scenarios(const ForecastSet& forecasts, const Horizon& horizon,
                               const CaseSpec& spec, std::uint64_t seed) {
  validate_case(spec);
  const int num_periods = horizon.num_periods;
  for (const auto& series : forecasts) {
    if (static_cast<int>(series.records.size()) != num_periods) {
      throw InputError("forecast for region " + series.region_id + " covers " +
                       std::to_string(series.records.size()) + " of " +
                       std::to_string(num_periods) + " days");
    }
  }

  ScenarioSet set;
  set.horizon = horizon;
  set.case_spec = spec;
  set.seed = seed;
  for (const auto& series : forecasts) set.region_ids.push_back(series.region_id);

  ScenarioRng rng(seed);
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(spec.scenario_count));
  for (int w = 0; w < spec.scenario_count; ++w) {
    DemandScenario s;
    s.num_regions = set.num_regions();
    s.num_periods = num_periods;
    s.tail = rng.unit() < spec.right_tail_prob ? Tail::kRight : Tail::kLeft;
    s.partition = static_cast<int>(rng.index(static_cast<std::uint64_t>(spec.partitions)));
    s.raw_weight = s.tail == Tail::kRight ? spec.right_tail_weight : spec.left_tail_weight;
    s.demand.resize(static_cast<std::size_t>(s.num_regions) * num_periods);
    for (int n = 0; n < s.num_regions; ++n) {
      for (int t = 1; t <= num_periods; ++t) {
        const ForecastRecord& r = forecasts[n].records[t - 1];
        s.at(n, t) =
            sample_tail_partition(r.lower, r.mean, r.upper, s.tail, s.partition, spec.partitions,
                                  rng.unit());
      }
    }
    weights.push_back(s.raw_weight);
    set.scenarios.push_back(std::move(s));
  }
  set.probabilities = normalize_weights(weights);
  return set;
}

void check_compatible(const PlanningInstance& instance, const ScenarioSet& set) {
  if (set.num_regions() != instance.num_regions()) {
    throw ShapeMismatchError("scenario set covers " + std::to_string(set.num_regions()) +
                             " regions but the instance has " +
                             std::to_string(instance.num_regions()));
  }
  for (int n = 0; n < instance.num_regions(); ++n) {
    if (set.region_ids[n] != instance.regions[n].id) {
      throw ShapeMismatchError("scenario region " + std::to_string(n) + " is '" +
                               set.region_ids[n] + "' but the instance has '" +
                               instance.regions[n].id + "'");
    }
  }
  if (set.num_periods() != instance.num_periods()) {
    throw ShapeMismatchError("scenario horizon has " + std::to_string(set.num_periods()) +
                             " periods but the instance has " +
                             std::to_string(instance.num_periods()));
  }
  if (set.scenarios.empty() || set.probabilities.size() != set.scenarios.size()) {
    throw ShapeMismatchError("scenario set needs one probability per scenario and at least one scenario");
  }
  for (const auto& s : set.scenarios) {
    if (s.num_regions != instance.num_regions() || s.num_periods != instance.num_periods() ||
        s.demand.size() !=
            static_cast<std::size_t>(instance.num_regions()) * instance.num_periods()) {
      throw ShapeMismatchError("scenario demand grid does not match the instance shape");
    }
  }
}

}  // namespace ventalloc
