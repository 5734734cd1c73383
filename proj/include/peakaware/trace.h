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

// Core data model of a billing cycle: grid prices and demands per slot, the
// tariff and generator parameters, a schedule of generator output and grid
// purchases, and the resulting bill.

#ifndef PEAKAWARE_TRACE_H_
#define PEAKAWARE_TRACE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace peakaware {

// Money and ratios are plain doubles. Equality assertions on either use this
// absolute tolerance.
using Money = double;
inline constexpr double kTolerance = 1e-9;

// Per-slot grid prices p(t) and demands d(t) for one billing cycle.
// Immutable after construction; T >= 1, every price > 0, every demand >= 0.
class Trace {
 public:
  Trace(std::vector<double> prices, std::vector<double> demands);

  std::size_t size() const { return prices_.size(); }
  std::span<const double> prices() const { return prices_; }
  std::span<const double> demands() const { return demands_; }
  double price(std::size_t t) const { return prices_[t]; }
  double demand(std::size_t t) const { return demands_[t]; }

  double min_price() const { return min_price_; }
  double max_price() const { return max_price_; }
  double max_demand() const { return max_demand_; }

  // Every demand is 0 or 1.
  bool is_binary() const;
  // Every demand is a whole number.
  bool is_integral() const;

  // Same prices, different demand vector.
  Trace with_demands(std::vector<double> demands) const;

 private:
  std::vector<double> prices_;
  std::vector<double> demands_;
  double min_price_ = 0.0;
  double max_price_ = 0.0;
  double max_demand_ = 0.0;
};

struct BillingParams {
  Money generator_cost = 0.0;  // p_g, per unit of local generation.
  Money peak_price = 0.0;      // p_m, per unit of the cycle's peak grid draw.
  double capacity = 0.0;       // C, generator output limit per slot.
  std::optional<double> ramp;  // R, limit on |u(t) - u(t-1)|.

  // Checks p_m > 0, C >= 1, R >= 0, p_g > 0. Throws DomainError.
  void Validate() const;
};

// Checks params on their own and p_g >= max_t p(t) for this trace. Throws
// DomainError.
void CheckPairing(const Trace& trace, const BillingParams& params);

struct Schedule {
  std::vector<double> generator;  // u(t)
  std::vector<double> grid;       // v(t)

  static Schedule Zero(std::size_t slots);
  std::size_t size() const { return generator.size(); }
};

// Throws StructuralError on a length mismatch and ValidationError naming the
// first slot that violates demand satisfaction, 0 <= u <= C, v >= 0 or, when
// params.ramp is set, the ramp limit (with u(0) = 0 before the first slot).
void ValidateSchedule(const Schedule& schedule, const Trace& trace,
                      const BillingParams& params);

struct CostBreakdown {
  Money volume = 0.0;  // sum_t p(t) v(t)
  Money peak = 0.0;    // p_m max_t v(t)
  Money local = 0.0;   // sum_t p_g u(t)
  Money total = 0.0;   // volume + peak + local
};

// Bill of a validated schedule.
CostBreakdown CostOf(const Schedule& schedule, const Trace& trace,
                     const BillingParams& params);

// Critical peak-demand threshold: (1/p_m) sum_t (p_g - p(t)) d(t).
double Sigma(const Trace& trace, const BillingParams& params);

// min_t p(t) / p_g, in (0, 1].
double Beta(const Trace& trace, const BillingParams& params);

// Bill of serving every unit from the grid: sum_t p(t) d(t) + p_m max_t d(t).
Money GridOnlyCost(const Trace& trace, const BillingParams& params);

// 1 - alg_total / GridOnlyCost. Negative when the schedule costs more than
// buying everything from the grid. Throws UndefinedRatioError on an all-zero
// demand trace.
double CostReduction(Money alg_total, const Trace& trace,
                     const BillingParams& params);

}  // namespace peakaware

#endif  // PEAKAWARE_TRACE_H_
