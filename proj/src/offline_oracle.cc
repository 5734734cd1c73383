/*
Copyright 2026 The peakaware Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "peakaware/offline_oracle.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "peakaware/error.h"

namespace peakaware {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool IsWhole(double x) { return x == std::floor(x); }

// Grid serves min(d(t), cap); the generator covers the remainder.
Schedule CappedSchedule(const Trace& trace, double cap) {
  Schedule schedule = Schedule::Zero(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    schedule.grid[t] = std::min(trace.demand(t), cap);
    schedule.generator[t] = trace.demand(t) - schedule.grid[t];
  }
  return schedule;
}

// out[u] = min over |u - w| <= radius of cost[w], arg[u] the smallest such w.
void WindowMin(const std::vector<double>& cost, int radius,
               std::vector<double>& out, std::vector<int>& arg) {
  const int n = static_cast<int>(cost.size());
  out.assign(n, kInf);
  arg.assign(n, -1);
  std::deque<int> window;  // indices with strictly increasing cost
  int next = 0;
  for (int u = 0; u < n; ++u) {
    const int hi = std::min(n - 1, u + radius);
    for (; next <= hi; ++next) {
      while (!window.empty() && cost[window.back()] > cost[next]) {
        window.pop_back();
      }
      window.push_back(next);
    }
    while (window.front() < u - radius) window.pop_front();
    out[u] = cost[window.front()];
    arg[u] = out[u] == kInf ? -1 : window.front();
  }
}

struct RampSolve {
  double value = kInf;           // DP optimum + p_m * cap
  std::vector<int> levels;       // u(t), filled only when requested
  std::size_t empty_slot = 0;    // first slot without states, when infeasible
};

RampSolve SolveRampForCap(const Trace& trace, const BillingParams& params,
                          int cap, bool reconstruct) {
  const int capacity = static_cast<int>(params.capacity);
  const int radius = static_cast<int>(std::min<double>(*params.ramp, capacity));
  const std::size_t slots = trace.size();
  const int width = capacity + 1;

  std::vector<double> previous(width, kInf);
  previous[0] = 0.0;  // generator is off before the first slot
  std::vector<double> best;
  std::vector<int> best_arg;
  std::vector<std::vector<int>> parent;
  if (reconstruct) parent.assign(slots, std::vector<int>(width, -1));

  RampSolve solve;
  for (std::size_t t = 0; t < slots; ++t) {
    WindowMin(previous, radius, best, best_arg);
    const double demand = trace.demand(t);
    const int lowest = std::max(0, static_cast<int>(demand) - cap);
    std::vector<double> current(width, kInf);
    bool any = false;
    for (int u = lowest; u < width; ++u) {
      if (best[u] == kInf) continue;
      const double grid = std::max(0.0, demand - u);
      current[u] =
          best[u] + trace.price(t) * grid + params.generator_cost * u;
      if (reconstruct) parent[t][u] = best_arg[u];
      any = true;
    }
    if (!any) {
      solve.empty_slot = t;
      return solve;
    }
    previous.swap(current);
  }

  const auto last = std::min_element(previous.begin(), previous.end());
  solve.value = *last + params.peak_price * cap;
  if (reconstruct) {
    solve.levels.assign(slots, 0);
    int u = static_cast<int>(last - previous.begin());
    for (std::size_t t = slots; t-- > 0;) {
      solve.levels[t] = u;
      u = parent[t][u];
    }
  }
  return solve;
}

}  // namespace

OracleResult OptimalBasic(const Trace& trace, const BillingParams& params) {
  if (!trace.is_binary()) {
    throw DomainError("OptimalBasic requires 0/1 demand");
  }
  if (params.ramp) throw DomainError("OptimalBasic does not model ramp limits");
  const bool all_grid = Sigma(trace, params) > 1.0;
  OracleResult result;
  result.schedule = CappedSchedule(trace, all_grid ? 1.0 : 0.0);
  result.total = CostOf(result.schedule, trace, params).total;
  result.peak_level = all_grid ? trace.max_demand() : 0.0;
  return result;
}

OracleResult OptimalGeneral(const Trace& trace, const BillingParams& params) {
  CheckPairing(trace, params);
  if (params.ramp) {
    throw DomainError("OptimalGeneral does not model ramp limits");
  }
  const double floor = std::max(0.0, trace.max_demand() - params.capacity);
  std::set<double> candidates = {floor};
  for (double d : trace.demands()) {
    if (d >= floor) candidates.insert(d);
  }

  OracleResult result;
  result.total = kInf;
  for (double cap : candidates) {  // ascending, so ties keep the smaller cap
    Schedule schedule = CappedSchedule(trace, cap);
    const Money total = CostOf(schedule, trace, params).total;
    if (total < result.total) {
      result.schedule = std::move(schedule);
      result.total = total;
      result.peak_level = cap;
    }
  }
  return result;
}

OracleResult OptimalWithRamp(const Trace& trace, const BillingParams& params) {
  CheckPairing(trace, params);
  if (!params.ramp) throw DomainError("OptimalWithRamp requires a ramp limit");
  if (!trace.is_integral()) {
    throw DomainError("OptimalWithRamp requires integer demand");
  }
  if (!IsWhole(params.capacity) || !IsWhole(*params.ramp)) {
    throw DomainError("OptimalWithRamp requires integer capacity and ramp");
  }

  const int top = static_cast<int>(trace.max_demand());
  int best_cap = -1;
  double best_value = kInf;
  std::size_t empty_slot = 0;
  for (int cap = 0; cap <= top; ++cap) {
    const RampSolve solve = SolveRampForCap(trace, params, cap, false);
    if (solve.value == kInf) {
      empty_slot = solve.empty_slot;
      continue;
    }
    if (solve.value < best_value) {
      best_value = solve.value;
      best_cap = cap;
    }
  }
  if (best_cap < 0) {
    throw InfeasibleError("no ramp-feasible schedule; slot " +
                          std::to_string(empty_slot) + " has no valid level");
  }

  const RampSolve solve = SolveRampForCap(trace, params, best_cap, true);
  OracleResult result;
  result.schedule = Schedule::Zero(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const double u = solve.levels[t];
    result.schedule.generator[t] = u;
    result.schedule.grid[t] = std::max(0.0, trace.demand(t) - u);
  }
  result.total = CostOf(result.schedule, trace, params).total;
  result.peak_level = best_cap;
  return result;
}

}  // namespace peakaware
