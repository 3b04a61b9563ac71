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

#include "ventalloc/model/milp_model.hpp"
#include "ventalloc/solver/bounded_simplex.hpp"
#include "ventalloc/solver/solve_types.hpp"

namespace ventalloc {

// Solves the continuous relaxation (binaries relaxed to [0, 1]).
SolveResult solve_lp_relaxation(const MilpModel& model, const LpOptions& options = {});

// LP-based branch-and-bound over the binary columns.
//
// Nodes are explored best-bound first (ties: deeper node, then creation
// order). Branching picks the most fractional binary, ties to the lowest
// column index; both children are solved on creation so each open node
// carries its own LP bound. Before the search, the root relaxation is
// rounded and re-solved to seed an incumbent. Every incumbent is re-solved
// with its binaries fixed to exact 0/1 values.
//
// Deterministic for a fixed model and limits unless a time limit cuts the
// search short.
SolveResult branch_and_bound(const MilpModel& model, const SolveLimits& limits = {});

}  // namespace ventalloc
