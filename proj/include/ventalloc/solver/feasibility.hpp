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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ventalloc/model/milp_model.hpp"

namespace ventalloc {

struct Violation {
  enum class Kind { kRow, kColumnBound, kIntegrality };
  Kind kind = Kind::kRow;
  int index = 0;     // row or column index
  std::string name;  // row or column name
  // Signed amount by which the constraint is missed (always > tol).
  double amount = 0.0;
  std::optional<RowTag> row_tag;          // set for row violations of built models
  std::optional<VariableKey> column_key;  // set for column violations of built models

  std::string describe() const;
};

// Every row, bound and binary-integrality condition that `assignment` misses
// by more than `tol`. Empty iff the assignment is feasible.
std::vector<Violation> check_feasibility(const MilpModel& model, std::span<const double> assignment,
                                         double tol);

}  // namespace ventalloc
