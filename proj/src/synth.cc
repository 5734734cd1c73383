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

#include "peakaware/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "peakaware/error.h"

namespace peakaware {
namespace {

constexpr int kHoursPerDay = 24;

// 0 at `trough_hour`, 1 twelve hours later.
double Diurnal(int hour, int trough_hour) {
  const double phase = 2.0 * std::numbers::pi * (hour - trough_hour) /
                       static_cast<double>(kHoursPerDay);
  return 0.5 * (1.0 - std::cos(phase));
}

}  // namespace

SynthTrace MakeSynthTrace(int days, std::uint64_t seed,
                          const SynthProfile& profile) {
  if (days < 1) throw DomainError("need at least one day");
  if (!(profile.base_level >= 0.0 && profile.peak_level >= profile.base_level)) {
    throw DomainError("need 0 <= base_level <= peak_level");
  }
  if (!(profile.price_low > 0.0 && profile.price_high >= profile.price_low)) {
    throw DomainError("need 0 < price_low <= price_high");
  }
  if (!(profile.noise >= 0.0 && profile.price_noise >= 0.0)) {
    throw DomainError("noise levels must be non-negative");
  }

  std::mt19937_64 demand_engine(seed);
  std::mt19937_64 price_engine(seed ^ 0x5bd1e9955bd1e995ULL);
  std::normal_distribution<double> standard(0.0, 1.0);

  const auto slots = static_cast<std::size_t>(days) * kHoursPerDay;
  std::vector<double> prices(slots);
  std::vector<double> demands(slots);
  std::vector<Timestamp> timestamps(slots);
  const Timestamp start = std::chrono::sys_days{std::chrono::year{2018} /
                                                std::chrono::April / 1};
  for (std::size_t t = 0; t < slots; ++t) {
    const int hour = static_cast<int>(t % kHoursPerDay);
    timestamps[t] = start + std::chrono::hours{static_cast<long>(t)};

    const double demand_shape =
        profile.base_level +
        (profile.peak_level - profile.base_level) * Diurnal(hour, 4);
    const double demand_error = standard(demand_engine);
    demands[t] = std::max(
        0.0, std::round(demand_shape + profile.noise * demand_error));

    const double price_shape =
        profile.price_low +
        (profile.price_high - profile.price_low) * Diurnal(hour, 3);
    const double price_error = standard(price_engine);
    const double price =
        std::clamp(price_shape + profile.price_noise * price_error,
                   profile.price_low, profile.price_high);
    prices[t] = std::round(price * 100.0) / 100.0;
  }
  return {Trace(std::move(prices), std::move(demands)), std::move(timestamps)};
}

}  // namespace peakaware
