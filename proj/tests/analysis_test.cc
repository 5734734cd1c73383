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

#include "peakaware/analysis.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "peakaware/error.h"
#include "peakaware/offline_oracle.h"
#include "peakaware/online.h"

namespace peakaware {
namespace {

constexpr double kE = std::numbers::e;

double BedRatio(const WorstCaseInstance& instance, SwitchPolicy policy) {
  const RunRecord run = RunThreshold(instance.trace, instance.params, policy);
  return EmpiricalCr(CostOf(run.schedule, instance.trace, instance.params).total,
                     OptimalBasic(instance.trace, instance.params).total);
}

TEST(HTest, Examples) {
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::Finite(0.5), 0.5, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::Finite(2.0), 1.5, 0.5), 1.2);
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::NegOne(), 0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::Infinity(), 0.5, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::Infinity(), 1.5, 0.5), 1.2);
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::Finite(0.3), 0.0, 0.5), 1.0);
  EXPECT_THROW(H(SwitchPolicy::Finite(0.3), -1.0, 0.5), DomainError);
  EXPECT_THROW(H(SwitchPolicy::Finite(0.3), 1.0, 0.0), DomainError);
}

TEST(HTest, NegOneAboveOneIsTheGridCostShare) {
  // All-grid from the start, sigma > 1: ratio 1 - (1 - beta) / K.
  const double sigma = 3.0, beta = 0.25;
  const double k = (sigma - 1.0) * beta + 1.0;
  EXPECT_DOUBLE_EQ(H(SwitchPolicy::NegOne(), sigma, beta),
                   1.0 - (1.0 - beta) / k);
}

TEST(WorstCaseCrTest, Examples) {
  EXPECT_DOUBLE_EQ(WorstCaseCr(1.0, 0.5), 1.5);
  EXPECT_DOUBLE_EQ(WorstCaseCr(1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(WorstCaseCr(0.5, 0.5), 2.0);
  EXPECT_THROW(WorstCaseCr(0.0, 0.5), DomainError);
}

TEST(WorstCaseCrTest, IsTheMaximumOfHOverSigma) {
  for (double s : {0.2, 0.5, 1.0, 1.7, 4.0}) {
    for (double beta : {0.1, 0.5, 0.9}) {
      double best = 0.0;
      for (int i = 1; i <= 20000; ++i) {
        best = std::max(best, H(SwitchPolicy::Finite(s), i * 1e-3, beta));
      }
      EXPECT_NEAR(best, WorstCaseCr(s, beta), 1e-12) << s << " " << beta;
    }
  }
}

TEST(DetBoundsTest, Examples) {
  EXPECT_DOUBLE_EQ(DetBounds(1.0, 0.5).robustness, 1.5);
  const Bounds half = DetBounds(0.5, 0.75);
  EXPECT_DOUBLE_EQ(half.robustness, 1.5);
  EXPECT_DOUBLE_EQ(half.consistency, 1.5);
  EXPECT_NEAR(DetBounds(1e-9, 0.5).consistency, 1.0, 1e-8);
  EXPECT_THROW(DetBounds(0.0, 0.5), DomainError);
}

TEST(RandBoundsTest, Limits) {
  for (double beta : {0.05, 0.5, 1.0}) {
    const Bounds one = RandBounds(1.0, beta);
    EXPECT_NEAR(one.robustness, kE / (kE - 1.0 + beta), 1e-15);
    EXPECT_NEAR(one.consistency, kE / (kE - 1.0 + beta), 1e-15);
    EXPECT_NEAR(RandBounds(0.0, beta).consistency, 1.0, 1e-15);
  }
  const double phi = 1.0 / (kE - 0.5);
  EXPECT_NEAR(RandBounds(0.5, 0.5).robustness,
              phi * (kE + 0.5 * 0.5 * (kE - 0.5) / 0.5), 1e-15);
  EXPECT_THROW(RandBounds(1.5, 0.5), DomainError);
}

TEST(NaiveBoundsTest, Examples) {
  EXPECT_DOUBLE_EQ(NaiveBounds(0.5, 0.5).consistency, 2.0);
  EXPECT_DOUBLE_EQ(NaiveBounds(0.5, 0.1).consistency, 10.0);
  EXPECT_GT(NaiveBounds(0.5, 0.1).consistency,
            RandBounds(0.5, 0.1).consistency + 1.0);
  EXPECT_NEAR(NaiveBounds(1.0 - 1e-9, 0.5).robustness, kE / (kE - 0.5), 1e-7);
  EXPECT_THROW(NaiveBounds(1.0, 0.5), DomainError);
}

TEST(ExpectedRatioTest, LowLowCase) {
  EXPECT_NEAR(ExpectedRatio(LambdaRedDistribution(0.5, 0.5, 0.5), 0.7, 0.5),
              (kE - 0.25) / (kE - 0.5), 1e-9);
  EXPECT_NEAR((kE - 0.25) / (kE - 0.5), 1.11271, 1e-4);
}

TEST(ExpectedRatioTest, RedRatio) {
  for (double sigma : {0.1, 0.5, 0.99}) {
    EXPECT_NEAR(ExpectedRatio(LambdaRedDistribution(2.0, 1.0, 0.3), sigma, 0.3),
                RandBounds(1.0, 0.3).robustness, 1e-9);
  }
}

TEST(ExpectedRatioTest, ClosedFormsAgreeWithQuadrature) {
  for (double lambda : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    for (double beta : {0.1, 0.5, 0.9}) {
      for (double sigma : {0.2, 0.9, 1.1, 3.0, 10.0}) {
        for (bool high : {false, true}) {
          const double quadrature = ExpectedRatio(
              LambdaRedDistribution(high ? 2.0 : 0.5, lambda, beta), sigma,
              beta);
          double closed = ClosedFormExpectedRatio(high, sigma, lambda, beta);
          if (high && sigma > 1.0) {
            // The published high/high form is an upper bound; subtracting
            // the dropped grid-from-start term makes it exact.
            EXPECT_LE(quadrature, closed + 1e-9);
            closed -= HighHighClosedFormExcess(sigma, lambda, beta);
          }
          EXPECT_NEAR(quadrature, closed, 1e-9)
              << "lambda=" << lambda << " beta=" << beta
              << " sigma=" << sigma << " high=" << high;
        }
      }
    }
  }
}

TEST(ExpectedRatioTest, RejectsUnnormalizedSpecs) {
  DistributionSpec spec = RedDistribution(0.5);
  spec.atoms.clear();
  EXPECT_THROW(ExpectedRatio(spec, 0.5, 0.5), ValidationError);
}

TEST(WorstCaseInstanceTest, AchievesSigma) {
  for (double s : {0.1, 0.5, 1.0, 1.3, 2.0}) {
    const WorstCaseInstance instance = MakeWorstCaseInstance(s, 0.5, 10.0);
    EXPECT_NEAR(instance.sigma, s, 1e-9);
    EXPECT_GE(instance.sigma, s);
    EXPECT_EQ(instance.sigma, Sigma(instance.trace, instance.params));
    EXPECT_NEAR(Beta(instance.trace, instance.params), 0.5, 1e-12);
    EXPECT_EQ(instance.trace.demands().back(), 0.0);
  }
  EXPECT_THROW(MakeWorstCaseInstance(0.0, 0.5, 10.0), DomainError);
}

TEST(WorstCaseInstanceTest, BedApproachesTwoMinusBeta) {
  const WorstCaseInstance coarse = MakeWorstCaseInstance(1.0, 0.5, 10.0, 100);
  const WorstCaseInstance fine = MakeWorstCaseInstance(1.0, 0.5, 10.0, 2000);
  const double coarse_gap = 1.5 - BedRatio(coarse, BedPolicy());
  const double fine_gap = 1.5 - BedRatio(fine, BedPolicy());
  EXPECT_GE(coarse_gap, -1e-12);
  EXPECT_LT(fine_gap, coarse_gap);
  EXPECT_LT(fine_gap, 1e-3);
}

TEST(WorstCaseInstanceTest, NoPremiumAtBetaOne) {
  const WorstCaseInstance instance = MakeWorstCaseInstance(1.5, 1.0, 10.0);
  EXPECT_EQ(instance.sigma, 0.0);
  EXPECT_DOUBLE_EQ(BedRatio(instance, BedPolicy()), 1.0);
}

TEST(WorstCaseInstanceTest, RatiosStayBelowH) {
  for (double s : {0.3, 0.8, 1.0, 1.6}) {
    for (double sigma : {0.4, 1.0, 1.6, 2.0}) {
      const WorstCaseInstance instance =
          MakeWorstCaseInstance(sigma, 0.3, 5.0, 200);
      EXPECT_LE(BedRatio(instance, SwitchPolicy::Finite(s)),
                H(SwitchPolicy::Finite(s), instance.sigma, 0.3) + 1e-6)
          << "s=" << s << " sigma=" << sigma;
    }
  }
}

TEST(EmpiricalCrTest, Examples) {
  EXPECT_DOUBLE_EQ(EmpiricalCr(6.0, 5.0), 1.2);
  EXPECT_DOUBLE_EQ(EmpiricalCr(5.0, 5.0), 1.0);
  EXPECT_THROW(EmpiricalCr(1.0, 0.0), UndefinedRatioError);
}

}  // namespace
}  // namespace peakaware
