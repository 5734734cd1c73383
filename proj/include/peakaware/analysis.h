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

// Competitive-ratio formulas for the threshold policies: the per-threshold
// worst-case ratio h, the robustness/consistency bounds of the deterministic
// and randomized predictors-aware policies, expected ratios of a threshold
// distribution, and an instance family on which the bounds are tight.

#ifndef PEAKAWARE_ANALYSIS_H_
#define PEAKAWARE_ANALYSIS_H_

#include <cstddef>

#include "peakaware/online.h"
#include "peakaware/trace.h"

namespace peakaware {

// Absolute error budget of ExpectedRatio's quadrature.
inline constexpr double kQuadratureTolerance = 1e-9;

struct Bounds {
  double robustness = 0.0;
  double consistency = 0.0;
};

// Worst-case ratio of the threshold policy `s` on instances with break-even
// ratio `sigma`. With K = (sigma - 1) beta + 1:
//   sigma <= 1: 1 if s > sigma, else 1 + (1 - sigma + s)(1 - beta) / sigma
//   sigma >  1: 1 + (sigma - 1)(1 - beta) / K if s > sigma,
//               else 1 + s (1 - beta) / K
// Infinity is above every sigma. NegOne uses the "else" branch at s = -1,
// which gives beta for sigma <= 1. sigma = 0 gives 1 (nothing to serve).
double H(SwitchPolicy s, double sigma, double beta);

// max over sigma of H(s, sigma, beta), attained at sigma = s.
// Throws DomainError unless s > 0 and beta in (0, 1].
double WorstCaseCr(double s, double beta);

// Threshold lambda or 1/lambda chosen by prediction.
Bounds DetBounds(double lambda, double beta);
// Randomized thresholds; lambda = 1 recovers e / (e - 1 + beta).
Bounds RandBounds(double lambda, double beta);
// Randomized thresholds with the exponential density stretched to
// [0, lambda] or [0, 1/lambda]; lambda in (0, 1).
Bounds NaiveBounds(double lambda, double beta);

// E[H(S, sigma, beta)] for S drawn from `spec`: atoms are summed exactly and
// the density part is integrated by Gauss-Kronrod, split at sigma where H
// jumps. Throws ValidationError when spec is not normalized and NumericError
// when the error estimate exceeds kQuadratureTolerance.
double ExpectedRatio(const DistributionSpec& spec, double sigma, double beta);

// Closed forms of ExpectedRatio(LambdaRedDistribution(sigma_hat, ...)).
// `predicted_high` selects sigma_hat > 1; sigma <= 1 or > 1 selects the rest:
//   high, sigma <= 1:  Phi[e - 1 + beta + lambda (1-beta) - (1-beta)(1-lambda) A]
//   high, sigma >  1:  Phi[e - 1 + beta + lambda (1-beta)
//                          + lambda (1-lambda)(1-beta)(sigma-1)(e-1) / K]
//   low,  sigma >  1:  Phi[e + (1-beta)(1-lambda)((sigma-1)(e-1) - 1) / K]
//   low,  sigma <= 1:  Phi[e - 1 + beta + lambda (1-beta)]
// with Phi = 1 / (e - 1 + beta), A = (1 - lambda)(e - 1) + beta and
// K = (sigma - 1) beta + 1. The high/high form is the published one; it omits
// the NegOne atom's negative contribution, so it exceeds the integral by
// HighHighClosedFormExcess.
double ClosedFormExpectedRatio(bool predicted_high, double sigma,
                               double lambda, double beta);
// Phi (1 - beta)(1 - lambda) A / K.
double HighHighClosedFormExcess(double sigma, double lambda, double beta);

struct WorstCaseInstance {
  Trace trace;
  BillingParams params;
  double sigma = 0.0;  // achieved break-even ratio
};

// Binary trace at constant price beta p_g: round(s * slots_per_unit) unit
// demands (at least one) followed by one empty slot, with p_g scaled so that
// sigma = s and the cumulative premium reaches s p_m exactly at the last
// demand slot. Threshold s then pays for the peak with nothing left to serve.
// beta = 1 leaves no premium (sigma = 0). Throws DomainError unless s > 0,
// beta in (0, 1], peak_price > 0 and slots_per_unit >= 1.
WorstCaseInstance MakeWorstCaseInstance(double s, double beta,
                                        Money peak_price,
                                        std::size_t slots_per_unit = 1000);

// alg_total / opt_total; UndefinedRatioError unless opt_total > 0.
double EmpiricalCr(Money alg_total, Money opt_total);

}  // namespace peakaware

#endif  // PEAKAWARE_ANALYSIS_H_
