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

#include "peakaware/trace.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "peakaware/error.h"

namespace peakaware {
namespace {

std::string SlotMessage(const char* what, std::size_t t) {
  return std::string(what) + " at slot " + std::to_string(t);
}

}  // namespace

Trace::Trace(std::vector<double> prices, std::vector<double> demands)
    : prices_(std::move(prices)), demands_(std::move(demands)) {
  if (prices_.size() != demands_.size()) {
    throw StructuralError("trace has " + std::to_string(prices_.size()) +
                          " prices but " + std::to_string(demands_.size()) +
                          " demands");
  }
  if (prices_.empty()) throw StructuralError("trace has no slots");
  for (std::size_t t = 0; t < prices_.size(); ++t) {
    if (!std::isfinite(prices_[t]) || prices_[t] <= 0.0) {
      throw ValidationError(SlotMessage("non-positive price", t));
    }
    if (!std::isfinite(demands_[t]) || demands_[t] < 0.0) {
      throw ValidationError(SlotMessage("negative demand", t));
    }
  }
  min_price_ = *std::min_element(prices_.begin(), prices_.end());
  max_price_ = *std::max_element(prices_.begin(), prices_.end());
  max_demand_ = *std::max_element(demands_.begin(), demands_.end());
}

bool Trace::is_binary() const {
  return std::all_of(demands_.begin(), demands_.end(),
                     [](double d) { return d == 0.0 || d == 1.0; });
}

bool Trace::is_integral() const {
  return std::all_of(demands_.begin(), demands_.end(),
                     [](double d) { return d == std::floor(d); });
}

Trace Trace::with_demands(std::vector<double> demands) const {
  return Trace(prices_, std::move(demands));
}

void BillingParams::Validate() const {
  if (!(generator_cost > 0.0)) throw DomainError("p_g must be positive");
  if (!(peak_price > 0.0)) throw DomainError("p_m must be positive");
  if (!(capacity >= 1.0)) throw DomainError("capacity must be at least 1");
  if (ramp && !(*ramp >= 0.0)) throw DomainError("ramp must be non-negative");
}

void CheckPairing(const Trace& trace, const BillingParams& params) {
  params.Validate();
  if (params.generator_cost < trace.max_price()) {
    throw DomainError("p_g (" + std::to_string(params.generator_cost) +
                      ") is below the maximum grid price (" +
                      std::to_string(trace.max_price()) + ")");
  }
}

Schedule Schedule::Zero(std::size_t slots) {
  return Schedule{std::vector<double>(slots, 0.0),
                  std::vector<double>(slots, 0.0)};
}

void ValidateSchedule(const Schedule& schedule, const Trace& trace,
                      const BillingParams& params) {
  if (schedule.generator.size() != trace.size() ||
      schedule.grid.size() != trace.size()) {
    throw StructuralError("schedule length does not match trace length " +
                          std::to_string(trace.size()));
  }
  double previous = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const double u = schedule.generator[t];
    const double v = schedule.grid[t];
    if (!(u >= -kTolerance)) {
      throw ValidationError(SlotMessage("negative generator output", t));
    }
    if (!(v >= -kTolerance)) {
      throw ValidationError(SlotMessage("negative grid purchase", t));
    }
    if (u > params.capacity + kTolerance) {
      throw ValidationError(SlotMessage("generator output above capacity", t));
    }
    if (u + v < trace.demand(t) - kTolerance) {
      throw ValidationError(SlotMessage("unserved demand", t));
    }
    if (params.ramp && std::abs(u - previous) > *params.ramp + kTolerance) {
      throw ValidationError(SlotMessage("ramp limit exceeded", t));
    }
    previous = u;
  }
}

CostBreakdown CostOf(const Schedule& schedule, const Trace& trace,
                     const BillingParams& params) {
  ValidateSchedule(schedule, trace, params);
  CostBreakdown cost;
  double peak = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    cost.volume += trace.price(t) * schedule.grid[t];
    cost.local += params.generator_cost * schedule.generator[t];
    peak = std::max(peak, schedule.grid[t]);
  }
  cost.peak = params.peak_price * peak;
  cost.total = cost.volume + cost.peak + cost.local;
  return cost;
}

double Sigma(const Trace& trace, const BillingParams& params) {
  CheckPairing(trace, params);
  double premium = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    premium += (params.generator_cost - trace.price(t)) * trace.demand(t);
  }
  return premium / params.peak_price;
}

double Beta(const Trace& trace, const BillingParams& params) {
  CheckPairing(trace, params);
  return trace.min_price() / params.generator_cost;
}

Money GridOnlyCost(const Trace& trace, const BillingParams& params) {
  Money volume = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    volume += trace.price(t) * trace.demand(t);
  }
  return volume + params.peak_price * trace.max_demand();
}

double CostReduction(Money alg_total, const Trace& trace,
                     const BillingParams& params) {
  if (!(alg_total >= 0.0)) throw DomainError("cost must be non-negative");
  const Money baseline = GridOnlyCost(trace, params);
  if (baseline <= 0.0) {
    throw UndefinedRatioError("cost reduction undefined for zero demand");
  }
  return 1.0 - alg_total / baseline;
}

}  // namespace peakaware
