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

#include "peakaware/layering.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "peakaware/error.h"

namespace peakaware {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BillingParams WithoutRamp(const BillingParams& params) {
  BillingParams copy = params;
  copy.ramp.reset();
  return copy;
}

}  // namespace

LayerStack Decompose(const Trace& trace) {
  if (!trace.is_integral()) {
    throw DomainError("layering requires integer demand");
  }
  LayerStack stack;
  stack.depth = static_cast<std::size_t>(trace.max_demand());
  stack.layers.reserve(stack.depth);
  for (std::size_t i = 1; i <= stack.depth; ++i) {
    std::vector<double> demands(trace.size());
    for (std::size_t t = 0; t < trace.size(); ++t) {
      demands[t] = trace.demand(t) >= static_cast<double>(i) ? 1.0 : 0.0;
    }
    stack.layers.push_back(trace.with_demands(std::move(demands)));
  }
  return stack;
}

std::size_t FirstOnlineLayer(std::size_t depth, double capacity) {
  const auto online =
      std::min(depth, static_cast<std::size_t>(std::floor(capacity)));
  return depth - online;
}

std::vector<double> PerfectLayerSigmaHats(const Trace& trace,
                                          const BillingParams& params) {
  std::vector<double> result;
  for (const Trace& layer : Decompose(trace).layers) {
    result.push_back(Sigma(layer, params));
  }
  return result;
}

std::vector<double> PredictedLayerSigmaHats(const Prediction& prediction,
                                            const BillingParams& params,
                                            std::size_t depth) {
  std::vector<double> result(depth, 0.0);
  for (std::size_t t = 0; t < prediction.prices.size(); ++t) {
    const double premium = params.generator_cost - prediction.prices[t];
    for (std::size_t i = 1; i <= depth; ++i) {
      if (prediction.demands[t] >= static_cast<double>(i)) {
        result[i - 1] += premium;
      }
    }
  }
  for (double& value : result) value /= params.peak_price;
  return result;
}

std::vector<double> AdversarialLayerSigmaHats(const Trace& trace,
                                              const BillingParams& params) {
  std::vector<double> result;
  for (const Trace& layer : Decompose(trace).layers) {
    result.push_back(AdversarialPredictor(layer, params).sigma_hat);
  }
  return result;
}

std::uint64_t LayerSeed(std::uint64_t seed, std::size_t layer) {
  return SplitMix64(SplitMix64(seed) ^ static_cast<std::uint64_t>(layer));
}

Schedule RunLayered(const Trace& trace, const BillingParams& params,
                    Algorithm algorithm, double lambda,
                    const std::vector<double>& sigma_hats, std::uint64_t seed) {
  CheckPairing(trace, params);
  const LayerStack stack = Decompose(trace);
  if (UsesPrediction(algorithm) && sigma_hats.size() != stack.depth) {
    throw StructuralError("expected " + std::to_string(stack.depth) +
                          " per-layer predictions, got " +
                          std::to_string(sigma_hats.size()));
  }
  const BillingParams layer_params = WithoutRamp(params);
  const std::size_t first_online = FirstOnlineLayer(stack.depth, params.capacity);

  Schedule total = Schedule::Zero(trace.size());
  for (std::size_t i = 0; i < stack.depth; ++i) {
    const Trace& layer = stack.layers[i];
    if (i < first_online) {
      for (std::size_t t = 0; t < trace.size(); ++t) {
        total.grid[t] += layer.demand(t);
      }
      continue;
    }
    const double sigma_hat = UsesPrediction(algorithm) ? sigma_hats[i] : 0.0;
    const RunRecord run = RunAlgorithm(layer, layer_params, algorithm, lambda,
                                       sigma_hat, LayerSeed(seed, i));
    for (std::size_t t = 0; t < trace.size(); ++t) {
      total.generator[t] += run.schedule.generator[t];
      total.grid[t] += run.schedule.grid[t];
    }
  }
  return total;
}

Schedule ProjectRamp(const Schedule& schedule, const Trace& trace,
                     const BillingParams& params) {
  if (!params.ramp) throw DomainError("ProjectRamp needs a ramp limit");
  if (schedule.generator.size() != trace.size() ||
      schedule.grid.size() != trace.size()) {
    throw StructuralError("schedule length does not match the trace");
  }
  const double ramp = *params.ramp;
  Schedule projected = schedule;
  double previous = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const double lower = std::max(0.0, previous - ramp);
    const double upper = std::max(
        lower, std::min({params.capacity, trace.demand(t), previous + ramp}));
    const double u = std::clamp(schedule.generator[t], lower, upper);
    projected.generator[t] = u;
    projected.grid[t] = std::max(schedule.grid[t], trace.demand(t) - u);
    previous = u;
  }
  return projected;
}

}  // namespace peakaware
