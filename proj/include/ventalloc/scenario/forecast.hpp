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

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "ventalloc/common/date.hpp"
#include "ventalloc/instance/instance.hpp"

namespace ventalloc {

// One day of a demand forecast: the point estimate and its confidence interval.
struct ForecastRecord {
  Date date;
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool operator==(const ForecastRecord&) const = default;
};

// Records are ordered by period, one per day of the planning horizon.
struct ForecastSeries {
  std::string region_id;
  std::vector<ForecastRecord> records;

  bool operator==(const ForecastSeries&) const = default;
};

// One series per instance region, in instance region order.
using ForecastSet = std::vector<ForecastSeries>;

// Reads the forecast CSV (header `region,date,mean,lower,upper`, one row per
// region-day, ISO dates). Rows for unknown regions or for days outside the
// horizon are skipped. Throws InputError on an unparseable row (with its line
// number), an out-of-order interval, a duplicate cell, or any missing
// (region, day) cell.
ForecastSet load_forecast(std::istream& source, const Horizon& horizon,
                          std::span<const Region> regions);
ForecastSet load_forecast_file(const std::string& path, const Horizon& horizon,
                               std::span<const Region> regions);

// Writes the same CSV schema load_forecast reads.
void write_forecast_csv(std::ostream& out, const ForecastSet& forecasts,
                        std::span<const Region> regions);

// Splits one CSV line; double quotes protect commas and `""` escapes a quote.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace ventalloc
