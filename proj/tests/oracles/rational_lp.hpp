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
#include <vector>

#include <gmpxx.h>

namespace ventalloc::oracle {

// Exact LP: min c'x subject to rows (sense, rhs), x >= 0. Dense textbook
// two-phase simplex with Bland's rule over GMP rationals; slow but free of
// rounding, for cross-checking the floating-point solver on tiny models.
struct RationalLp {
  enum class Sense { kLe, kEq, kGe };
  struct Row {
    std::vector<mpq_class> coefficients;  // one per variable
    Sense sense = Sense::kLe;
    mpq_class rhs;
  };

  int num_variables = 0;
  std::vector<mpq_class> objective;
  std::vector<Row> rows;

  int add_variable(const mpq_class& cost = 0);
  // Sparse row helper: pairs of (variable, coefficient).
  void add_row(const std::vector<std::pair<int, mpq_class>>& terms, Sense sense, const mpq_class& rhs);
};

struct RationalLpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  mpq_class objective;
  std::vector<mpq_class> values;
};

RationalLpResult solve_rational_lp(const RationalLp& lp);

}  // namespace ventalloc::oracle
