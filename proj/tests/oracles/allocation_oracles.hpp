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

#include "ventalloc/instance/instance.hpp"

namespace ventalloc::oracle {

// Demand grid of one scenario, region-major: demand[n * T + (t - 1)].
using DemandGrid = std::vector<double>;

// Smallest total shortage over plans whose shipments are whole units, found
// by exhaustive search over every integer net change of every region's
// inventory in every period. Shipping both ways in one period is dominated
// by shipping the net amount, so net changes cover all integer flows. The
// sharing rule and its big-M constants are applied exactly as the allocation
// program states them. nullopt when no plan exists.
// Requires integral usable initial inventories.
std::optional<double> integer_flow_optimum(const PlanningInstance& instance, const DemandGrid& demand);

// Exact optimum of the mixed-binary program for one scenario with
// continuous flows: every 0/1 pattern of the sharing indicators, each
// resulting LP solved in rational arithmetic. nullopt when infeasible.
std::optional<mpq_class> exact_mixed_binary_optimum(const PlanningInstance& instance,
                                                    const DemandGrid& demand);

// The big-M constant of region n in period t, as the allocation program
// publishes it.
double published_big_m(const PlanningInstance& instance, int n, int t);

}  // namespace ventalloc::oracle
