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

#include "ventalloc/scenario/forecast.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_real(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

ForecastSet load_forecast(std::istream& source, const Horizon& horizon,
                          std::span<const Region> regions) {
  std::map<std::string, std::size_t> index_of;
  for (std::size_t n = 0; n < regions.size(); ++n) index_of.emplace(regions[n].id, n);

  const auto num_periods = static_cast<std::size_t>(horizon.num_periods);
  std::vector<std::vector<std::optional<ForecastRecord>>> cells(
      regions.size(), std::vector<std::optional<ForecastRecord>>(num_periods));

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(source, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (!header_seen) {
      const std::vector<std::string> expected = {"region", "date", "mean", "lower", "upper"};
      for (auto& f : fields) f = std::string(trim(f));
      if (fields != expected) {
        throw InputError("forecast CSV line " + std::to_string(line_no) +
                         ": expected header 'region,date,mean,lower,upper'");
      }
      header_seen = true;
      continue;
    }
    auto row_error = [&](const std::string& what) {
      return InputError("forecast CSV line " + std::to_string(line_no) + ": " + what);
    };
    if (fields.size() != 5) {
      throw row_error("expected 5 fields, got " + std::to_string(fields.size()));
    }
    const std::string region(trim(fields[0]));
    Date date;
    try {
      date = Date::parse_iso(trim(fields[1]));
    } catch (const InputError& e) {
      throw row_error(e.what());
    }
    const auto mean = parse_real(fields[2]);
    const auto lower = parse_real(fields[3]);
    const auto upper = parse_real(fields[4]);
    if (!mean || !lower || !upper) throw row_error("unparseable number");

    auto it = index_of.find(region);
    const auto period = horizon.period_of(date);
    if (it == index_of.end() || !period) continue;

    if (*upper < *lower) {
      throw row_error("interval order violated for region " + region + " on " + date.to_iso() +
                      ": upper " + std::string(trim(fields[4])) + " < lower " +
                      std::string(trim(fields[3])));
    }
    if (*lower < 0.0) throw row_error("negative lower bound for region " + region);
    if (*mean < *lower || *mean > *upper) {
      throw row_error("mean outside [lower, upper] for region " + region + " on " +
                      date.to_iso());
    }
    auto& cell = cells[it->second][static_cast<std::size_t>(*period - 1)];
    if (cell) {
      throw row_error("duplicate row for region " + region + " on " + date.to_iso());
    }
    cell = ForecastRecord{date, *mean, *lower, *upper};
  }
  if (!header_seen) throw InputError("forecast CSV: empty input");

  std::string missing;
  int missing_count = 0;
  ForecastSet out(regions.size());
  for (std::size_t n = 0; n < regions.size(); ++n) {
    out[n].region_id = regions[n].id;
    for (std::size_t p = 0; p < num_periods; ++p) {
      if (!cells[n][p]) {
        if (++missing_count <= 10) {
          missing += (missing.empty() ? "" : ", ") + regions[n].id + " " +
                     horizon.date_of(static_cast<int>(p) + 1).to_iso();
        }
        continue;
      }
      out[n].records.push_back(*cells[n][p]);
    }
  }
  if (missing_count > 0) {
    throw InputError("forecast CSV: missing day for " + std::to_string(missing_count) +
                     " region-day cell(s): " + missing + (missing_count > 10 ? ", ..." : ""));
  }
  return out;
}

ForecastSet load_forecast_file(const std::string& path, const Horizon& horizon,
                               std::span<const Region> regions) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open forecast file '" + path + "'");
  return load_forecast(in, horizon, regions);
}

void write_forecast_csv(std::ostream& out, const ForecastSet& forecasts,
                        std::span<const Region> regions) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  out << "region,date,mean,lower,upper\n";
  char buf[128];
  for (std::size_t n = 0; n < forecasts.size() && n < regions.size(); ++n) {
    for (const auto& r : forecasts[n].records) {
      std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g", r.mean, r.lower, r.upper);
      out << quote(regions[n].id) << ',' << r.date.to_iso() << buf << '\n';
    }
  }
}

}  // namespace ventalloc
