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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "peakaware/error.h"

namespace peakaware {
namespace {

BillingParams Params(double p_g, double p_m) {
  BillingParams params;
  params.generator_cost = p_g;
  params.peak_price = p_m;
  params.capacity = 1.0;
  return params;
}

TEST(PredictionTest, HandComputedSigmaHat) {
  const Trace trace({1.0, 1.0}, {1.0, 1.0});
  const Prediction prediction =
      MakePrediction(trace, {1.0, 1.0}, {2.0, 2.0}, Params(2.0, 4.0));
  EXPECT_DOUBLE_EQ(prediction.sigma_hat, 1.0);
  EXPECT_DOUBLE_EQ(
      MakePrediction(trace, {1.0, 1.0}, {0.0, 0.0}, Params(2.0, 4.0)).sigma_hat,
      0.0);
}

TEST(PredictionTest, NegativeSigmaHatIsAllowed) {
  const Trace trace({1.0}, {1.0});
  EXPECT_DOUBLE_EQ(
      MakePrediction(trace, {4.0}, {1.0}, Params(2.0, 4.0)).sigma_hat, -0.5);
}

TEST(PredictionTest, LengthMismatch) {
  const Trace trace({1.0, 1.0}, {1.0, 1.0});
  EXPECT_THROW(MakePrediction(trace, {1.0}, {1.0, 1.0}, Params(2.0, 4.0)),
               StructuralError);
}

TEST(PredictionTest, PerfectMatchesSigmaExactly) {
  const Trace trace({1.0, 3.5, 2.25, 0.75}, {3.0, 0.0, 2.0, 5.0});
  const BillingParams params = Params(4.0, 7.0);
  EXPECT_EQ(PerfectPrediction(trace, params).sigma_hat, Sigma(trace, params));
}

TEST(GaussianPredictorTest, ZeroNoiseIsTheTrace) {
  const Trace trace({1.0, 3.5, 2.25}, {3.0, 0.0, 2.0});
  const Prediction prediction =
      GaussianPredictor(trace, Params(4.0, 7.0), {0.0, 0.0}, 9);
  EXPECT_EQ(prediction.prices,
            std::vector<double>(trace.prices().begin(), trace.prices().end()));
  EXPECT_EQ(prediction.demands, std::vector<double>(trace.demands().begin(),
                                                    trace.demands().end()));
}

TEST(GaussianPredictorTest, DeterministicPerSeed) {
  const Trace trace({1.0, 3.5, 2.25}, {3.0, 0.0, 2.0});
  const Prediction a = GaussianPredictor(trace, Params(4.0, 7.0), {}, 9);
  const Prediction b = GaussianPredictor(trace, Params(4.0, 7.0), {}, 9);
  const Prediction c = GaussianPredictor(trace, Params(4.0, 7.0), {}, 10);
  EXPECT_EQ(a.prices, b.prices);
  EXPECT_EQ(a.demands, b.demands);
  EXPECT_NE(a.prices, c.prices);
  for (double d : a.demands) EXPECT_GE(d, 0.0);
}

TEST(GaussianPredictorTest, SampleStandardDeviation) {
  const std::size_t slots = 100000;
  const Trace trace(std::vector<double>(slots, 10.0),
                    std::vector<double>(slots, 1.0));
  const Prediction prediction =
      GaussianPredictor(trace, Params(20.0, 100.0), {}, 2024);
  double sum = 0.0, squares = 0.0;
  for (double p : prediction.prices) {
    sum += p - 10.0;
    squares += (p - 10.0) * (p - 10.0);
  }
  const double mean = sum / slots;
  const double stddev = std::sqrt(squares / slots - mean * mean);
  // Default price noise is half the maximum price.
  EXPECT_NEAR(stddev, 5.0, 0.02 * 5.0);
  EXPECT_THROW(GaussianPredictor(trace, Params(20.0, 100.0), {-1.0, 0.0}, 1),
               DomainError);
}

TEST(AdversarialPredictorTest, FlipsTheBranch) {
  const BillingParams params = Params(2.0, 4.0);
  const Trace low({1.0, 1.0}, {1.0, 1.0});  // sigma = 0.5
  EXPECT_NEAR(AdversarialPredictor(low, params).sigma_hat, 2.0, 1e-12);
  const Trace high({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(AdversarialPredictor(high, Params(2.0, 2.0)).sigma_hat, 0.0);
  const Trace idle({1.0, 1.0}, {0.0, 0.0});
  EXPECT_NEAR(AdversarialPredictor(idle, params).sigma_hat, 2.0, 1e-12);
}

}  // namespace
}  // namespace peakaware
