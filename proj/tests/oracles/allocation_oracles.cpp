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

#include "allocation_oracles.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "rational_lp.hpp"

namespace ventalloc::oracle {
namespace {

double usable(const PlanningInstance& inst, int n) {
  return (1.0 - inst.gamma[n]) * static_cast<double>(inst.initial_region_inventory[n]);
}

double produced_through(const PlanningInstance& inst, int t) {
  double sum = 0.0;
  for (int k = 0; k < t; ++k) sum += static_cast<double>(inst.production[k]);
  return sum;
}

}  // namespace

double published_big_m(const PlanningInstance& inst, int n, int t) {
  return static_cast<double>(inst.central_initial) + inst.tau[n] * usable(inst, n) +
         produced_through(inst, t);
}

std::optional<double> integer_flow_optimum(const PlanningInstance& inst, const DemandGrid& demand) {
  const int N = inst.num_regions();
  const int T = inst.num_periods();
  std::vector<long> start(N);
  for (int n = 0; n < N; ++n) {
    const double y0 = usable(inst, n);
    if (y0 != std::floor(y0)) throw std::invalid_argument("usable inventory must be integral");
    start[n] = static_cast<long>(y0);
  }
  long total = static_cast<long>(inst.central_initial);
  for (long v : start) total += v;

  // Frontier: region inventories -> least shortage so far. The center holds
  // the rest of the system's units.
  std::map<std::vector<long>, double> frontier{{start, 0.0}};
  for (int t = 1; t <= T; ++t) {
    total += inst.production[t - 1];
    std::map<std::vector<long>, double> next;
    for (const auto& [state, cost] : frontier) {
      std::vector<long> after(N, 0);
      // Odometer over every inventory vector with sum <= total.
      for (;;) {
        long used = 0;
        for (long v : after) used += v;
        bool ok = used <= total;
        for (int n = 0; ok && n < N; ++n) {
          const double y = static_cast<double>(after[n]);
          const double floor = (1.0 - inst.tau[n]) * usable(inst, n) + inst.rho[n] * demand[n * T + t - 1];
          const double big_m = published_big_m(inst, n, t);
          const long out = state[n] - after[n];  // units sent to the center
          if (out > 0) {
            // Sharing indicator on: above the floor, send at most the excess.
            ok = y >= floor && static_cast<double>(out) <= y - floor &&
                 static_cast<double>(out) <= big_m;
          } else {
            // Indicator off admits y >= floor - M; on admits y >= floor.
            ok = y >= floor - big_m;
          }
        }
        if (ok) {
          double shortage = 0.0;
          for (int n = 0; n < N; ++n) {
            shortage += std::max(0.0, demand[n * T + t - 1] - static_cast<double>(after[n]));
          }
          auto [it, inserted] = next.emplace(after, cost + shortage);
          if (!inserted) it->second = std::min(it->second, cost + shortage);
        }
        int k = 0;
        while (k < N && ++after[k] > total) after[k++] = 0;
        if (k == N) break;
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return std::nullopt;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [state, cost] : frontier) best = std::min(best, cost);
  return best;
}

std::optional<mpq_class> exact_mixed_binary_optimum(const PlanningInstance& inst,
                                                    const DemandGrid& demand) {
  const int N = inst.num_regions();
  const int T = inst.num_periods();
  const int cells = N * T;
  std::optional<mpq_class> best;
  for (long pattern = 0; pattern < (1L << cells); ++pattern) {
    RationalLp lp;
    // Variables: x, z, e, y[t >= 1] per cell; s[t] for t >= 1.
    std::vector<int> x(cells), z(cells), e(cells), y(cells), s(T);
    for (int c = 0; c < cells; ++c) {
      x[c] = lp.add_variable();
      z[c] = lp.add_variable();
      e[c] = lp.add_variable(1);
      y[c] = lp.add_variable();
    }
    for (int t = 0; t < T; ++t) s[t] = lp.add_variable();
    using S = RationalLp::Sense;
    for (int t = 1; t <= T; ++t) {
      std::vector<std::pair<int, mpq_class>> central;
      mpq_class central_rhs = -mpq_class(static_cast<double>(inst.production[t - 1]));
      // s[t-1] + Q + sum z - sum x - s[t] = 0
      if (t == 1) central_rhs -= mpq_class(static_cast<double>(inst.central_initial));
      else central.push_back({s[t - 2], 1});
      central.push_back({s[t - 1], -1});
      for (int n = 0; n < N; ++n) {
        const int c = n * T + t - 1;
        const mpq_class y0(usable(inst, n));
        const mpq_class d(demand[c]);
        const mpq_class floor = (1 - mpq_class(inst.tau[n])) * y0 + mpq_class(inst.rho[n]) * d;
        const mpq_class big_m(published_big_m(inst, n, t));
        const bool on = (pattern >> c) & 1;
        // y[t-1] + x - z - y[t] = 0
        if (t == 1) {
          lp.add_row({{x[c], 1}, {z[c], -1}, {y[c], -1}}, S::kEq, -y0);
        } else {
          lp.add_row({{y[c - 1], 1}, {x[c], 1}, {z[c], -1}, {y[c], -1}}, S::kEq, 0);
        }
        central.push_back({z[c], 1});
        central.push_back({x[c], -1});
        if (on) {
          lp.add_row({{y[c], 1}}, S::kGe, floor);
          lp.add_row({{z[c], 1}, {y[c], -1}}, S::kLe, -floor);
          lp.add_row({{z[c], 1}}, S::kLe, big_m);
        } else {
          lp.add_row({{y[c], 1}}, S::kGe, floor - big_m);
          lp.add_row({{z[c], 1}}, S::kLe, 0);
        }
        lp.add_row({{e[c], 1}, {y[c], 1}}, S::kGe, d);
      }
      lp.add_row(central, S::kEq, central_rhs);
    }
    const RationalLpResult result = solve_rational_lp(lp);
    if (result.status != RationalLpResult::Status::kOptimal) continue;
    if (!best || result.objective < *best) best = result.objective;
  }
  return best;
}

}  // namespace ventalloc::oracle
