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

#include "peakaware/prediction.h"

#include <algorithm>
#include <random>

#include "peakaware/error.h"

namespace peakaware {

double PredictedSigma(const Prediction& prediction,
                      const BillingParams& params) {
  if (prediction.prices.size() != prediction.demands.size()) {
    throw StructuralError("prediction vectors differ in length");
  }
  double premium = 0.0;
  for (std::size_t t = 0; t < prediction.prices.size(); ++t) {
    premium += (params.generator_cost - prediction.prices[t]) *
               prediction.demands[t];
  }
  return premium / params.peak_price;
}

Prediction MakePrediction(const Trace& trace, std::vector<double> prices,
                          std::vector<double> demands,
                          const BillingParams& params) {
  if (prices.size() != trace.size() || demands.size() != trace.size()) {
    throw StructuralError("prediction length does not match the trace");
  }
  for (double& d : demands) d = std::max(0.0, d);
  Prediction prediction{std::move(prices), std::move(demands), 0.0};
  prediction.sigma_hat = PredictedSigma(prediction, params);
  return prediction;
}

Prediction PerfectPrediction(const Trace& trace, const BillingParams& params) {
  return MakePrediction(
      trace, std::vector<double>(trace.prices().begin(), trace.prices().end()),
      std::vector<double>(trace.demands().begin(), trace.demands().end()),
      params);
}

Prediction GaussianPredictor(const Trace& trace, const BillingParams& params,
                             const GaussianNoise& noise, std::uint64_t seed) {
  const double price_sd = noise.price_stddev.value_or(trace.max_price() / 2.0);
  const double demand_sd =
      noise.demand_stddev.value_or(trace.max_demand() / 2.0);
  if (!(price_sd >= 0.0) || !(demand_sd >= 0.0)) {
    throw DomainError("noise standard deviations must be non-negative");
  }
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> standard(0.0, 1.0);
  std::vector<double> prices(trace.size());
  std::vector<double> demands(trace.size());
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const double price_error = standard(engine);
    const double demand_error = standard(engine);
    prices[t] = trace.price(t) + price_sd * price_error;
    demands[t] = trace.demand(t) + demand_sd * demand_error;
  }
  return MakePrediction(trace, std::move(prices), std::move(demands), params);
}

Prediction AdversarialPredictor(const Trace& trace,
                                const BillingParams& params) {
  const double sigma = Sigma(trace, params);
  std::vector<double> prices(trace.prices().begin(), trace.prices().end());
  std::vector<double> demands(trace.size(), 0.0);
  if (sigma <= 1.0) {
    constexpr double kTarget = 2.0;
    if (sigma > 0.0) {
      for (std::size_t t = 0; t < trace.size(); ++t) {
        demands[t] = trace.demand(t) * (kTarget / sigma);
      }
    } else {
      // No premium to rescale: predict one unit of premium per unit demand,
      // spread evenly over the cycle.
      const double per_slot =
          kTarget * params.peak_price / static_cast<double>(trace.size());
      for (std::size_t t = 0; t < trace.size(); ++t) {
        prices[t] = params.generator_cost - 1.0;
        demands[t] = per_slot;
      }
    }
  }
  return MakePrediction(trace, std::move(prices), std::move(demands), params);
}

}  // namespace peakaware
