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

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ventalloc/model/directory.hpp"

namespace ventalloc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

// Constraint families of the extensive-form allocation program.
enum class RowKind {
  kRegionBalance,      // y[t-1] + x - z = y[t]
  kCentralBalance,     // s[t-1] + Q + sum z - sum x = s[t]
  kSafetyActivation,   // y[t] - (1-tau) y[0] - rho d >= M (g - 1)
  kSafetyCap,          // z <= y[t] - (1-tau) y[0] - rho d + M (1 - g)
  kOutflowIndicator,   // z <= M g
  kCentralOutflowCap,  // sum x <= s[t-1] + Q + sum z
  kRegionInitial,      // y[0] = (1 - gamma) Y
  kCentralInitial,     // s[0] = I
  kShortage,           // e >= d - y[t]
};

std::string_view row_kind_name(RowKind kind);
std::optional<RowKind> row_kind_from_name(std::string_view name);

struct RowTag {
  RowKind kind = RowKind::kRegionBalance;
  std::optional<int> region;
  int period = 0;
  int scenario = 0;

  bool operator==(const RowTag&) const = default;
};

struct Column {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  double objective = 0.0;
  bool binary = false;

  bool operator==(const Column&) const = default;
};

// Sparse row: sum_k coefficients[k] * x[columns[k]] (sense) rhs.
struct Row {
  std::string name;
  std::vector<int> columns;
  std::vector<double> coefficients;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::optional<RowTag> tag;

  bool operator==(const Row&) const = default;
};

// Sparse mixed-binary program, always a minimization. Models built from an
// instance also carry the variable directory and the region ids used in names.
class MilpModel {
 public:
  int add_column(Column column);
  // Throws std::out_of_range if the row references a missing column.
  int add_row(Row row);

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<Column>& mutable_columns() { return columns_; }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_binaries() const;
  std::vector<int> binary_columns() const;

  double objective_value(std::span<const double> values) const;
  double row_activity(int row, std::span<const double> values) const;

  std::optional<int> column_by_name(const std::string& name) const;

  const std::optional<VariableDirectory>& directory() const { return directory_; }
  void set_directory(VariableDirectory directory) { directory_ = std::move(directory); }
  const std::vector<std::string>& region_ids() const { return region_ids_; }
  void set_region_ids(std::vector<std::string> ids) { region_ids_ = std::move(ids); }

  // Directory lookup. Throws if the model has no directory.
  int column(const VariableKey& key) const;

 private:
  std::vector<Column> columns_;
  std::vector<Row> rows_;
  std::optional<VariableDirectory> directory_;
  std::vector<std::string> region_ids_;
  mutable std::map<std::string, int> name_index_;
};

}  // namespace ventalloc
