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

// Predictions of a billing cycle and the predicted break-even ratio they
// imply. The predictor itself is a black box; the two built-in ones are a
// noisy copy of the truth and a deliberately wrong one.

#ifndef PEAKAWARE_PREDICTION_H_
#define PEAKAWARE_PREDICTION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "peakaware/trace.h"

namespace peakaware {

struct Prediction {
  std::vector<double> prices;   // p^(t), unclamped
  std::vector<double> demands;  // d^(t), clamped at 0
  double sigma_hat = 0.0;       // cached PredictedSigma of the two vectors
};

// (1/p_m) sum_t (p_g - p^(t)) d^(t). Predicted prices above p_g contribute
// negative terms.
double PredictedSigma(const Prediction& prediction,
                      const BillingParams& params);

// Builds a prediction, clamping negative demands to 0 and caching sigma_hat.
// Throws StructuralError when the vectors differ in length from `trace`.
Prediction MakePrediction(const Trace& trace, std::vector<double> prices,
                          std::vector<double> demands,
                          const BillingParams& params);

// The truth itself.
Prediction PerfectPrediction(const Trace& trace, const BillingParams& params);

struct GaussianNoise {
  // Unset means half of the trace's maximum price / demand.
  std::optional<double> price_stddev;
  std::optional<double> demand_stddev;
};

// p^(t) = p(t) + e1(t), d^(t) = max(0, d(t) + e2(t)) with independent
// zero-mean normal errors from one engine seeded with `seed`; draws alternate
// price, demand per slot.
Prediction GaussianPredictor(const Trace& trace, const BillingParams& params,
                             const GaussianNoise& noise, std::uint64_t seed);

// A prediction on the wrong side of 1: sigma_hat = 2 when the true sigma <= 1
// and 0 otherwise, obtained by rescaling the true demand.
Prediction AdversarialPredictor(const Trace& trace,
                                const BillingParams& params);

}  // namespace peakaware

#endif  // PEAKAWARE_PREDICTION_H_
