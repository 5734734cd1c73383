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

// Synthetic hourly traces with a diurnal shape, for experiments without
// metered data.

#ifndef PEAKAWARE_SYNTH_H_
#define PEAKAWARE_SYNTH_H_

#include <cstdint>
#include <vector>

#include "peakaware/csv_io.h"
#include "peakaware/trace.h"

namespace peakaware {

struct SynthProfile {
  // Demand swings between base_level (around 04:00) and peak_level (around
  // 16:00), plus N(0, noise^2), rounded and clamped at zero.
  double peak_level = 100.0;
  double base_level = 40.0;
  double noise = 8.0;
  // Prices swing between price_low (around 03:00) and price_high (around
  // 15:00), plus N(0, price_noise^2), clamped to [price_low, price_high].
  double price_low = 13.69;
  double price_high = 64.62;
  double price_noise = 4.0;
};

struct SynthTrace {
  Trace trace;
  std::vector<Timestamp> timestamps;  // hourly from 2018-04-01T00:00
};

// 24 * days slots. Demand and price noise come from separate engines, so
// changing one noise level leaves the other series unchanged. Throws
// DomainError when days < 1 or the levels are inconsistent.
SynthTrace MakeSynthTrace(int days, std::uint64_t seed,
                          const SynthProfile& profile = {});

}  // namespace peakaware

#endif  // PEAKAWARE_SYNTH_H_
