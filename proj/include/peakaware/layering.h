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

// Integer demand as a stack of 0/1 layers, and ramp-limited generators.

#ifndef PEAKAWARE_LAYERING_H_
#define PEAKAWARE_LAYERING_H_

#include <cstdint>
#include <vector>

#include "peakaware/online.h"
#include "peakaware/prediction.h"
#include "peakaware/trace.h"

namespace peakaware {

// layers[i - 1] has demand 1 at t iff d(t) >= i, for i = 1..depth, so the
// layers sum back to d. depth = max_t d(t).
struct LayerStack {
  std::vector<Trace> layers;
  std::size_t depth = 0;
};

// Throws DomainError on non-integer demand.
LayerStack Decompose(const Trace& trace);

// Layers that may use the generator: the top min(depth, floor(C)). The lower
// ones carry the demand the generator could never cover and go to the grid.
std::size_t FirstOnlineLayer(std::size_t depth, double capacity);

// Per-layer predicted ratios for RunLayered.
std::vector<double> PerfectLayerSigmaHats(const Trace& trace,
                                          const BillingParams& params);
// Layers the predicted demand the same way: layer i is 1 where d^(t) >= i.
std::vector<double> PredictedLayerSigmaHats(const Prediction& prediction,
                                            const BillingParams& params,
                                            std::size_t depth);
// AdversarialPredictor applied to each layer.
std::vector<double> AdversarialLayerSigmaHats(const Trace& trace,
                                              const BillingParams& params);

// Seed of layer `layer` (0-based) derived from the run seed.
std::uint64_t LayerSeed(std::uint64_t seed, std::size_t layer);

// Runs `algorithm` independently on every online layer and sends the lower
// layers to the grid, then sums the layers. sigma_hats holds one entry per
// layer (ignored by BED and RED; may then be empty). The ramp limit is not
// applied here; see ProjectRamp.
Schedule RunLayered(const Trace& trace, const BillingParams& params,
                    Algorithm algorithm, double lambda,
                    const std::vector<double>& sigma_hats, std::uint64_t seed);

// Forward pass from u = 0: u'(t) is u(t) clamped to
// [max(0, u'(t-1) - R), min(C, d(t), u'(t-1) + R)], except that the lower
// bound wins when the two cross (the generator cannot ramp down fast enough
// and keeps producing). Grid purchases rise to cover d(t) - u'(t).
// Throws DomainError when params.ramp is unset.
Schedule ProjectRamp(const Schedule& schedule, const Trace& trace,
                     const BillingParams& params);

}  // namespace peakaware

#endif  // PEAKAWARE_LAYERING_H_
