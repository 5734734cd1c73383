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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "peakaware/error.h"

namespace peakaware {
namespace {

BillingParams Params(double p_g, double p_m, double capacity = 10.0) {
  BillingParams params;
  params.generator_cost = p_g;
  params.peak_price = p_m;
  params.capacity = capacity;
  return params;
}

TEST(TraceTest, RejectsEmptyAndMismatchedInputs) {
  EXPECT_THROW(Trace({}, {}), StructuralError);
  EXPECT_THROW(Trace({1.0, 2.0}, {1.0}), StructuralError);
}

TEST(TraceTest, RejectsNonPositivePriceAndNegativeDemand) {
  EXPECT_THROW(Trace({0.0}, {1.0}), ValidationError);
  EXPECT_THROW(Trace({-1.0}, {1.0}), ValidationError);
  EXPECT_THROW(Trace({1.0}, {-1.0}), ValidationError);
}

TEST(TraceTest, Summaries) {
  const Trace trace({3.0, 1.0, 2.0}, {0.0, 2.0, 1.0});
  EXPECT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace.min_price(), 1.0);
  EXPECT_EQ(trace.max_price(), 3.0);
  EXPECT_EQ(trace.max_demand(), 2.0);
  EXPECT_FALSE(trace.is_binary());
  EXPECT_TRUE(trace.is_integral());
  EXPECT_TRUE(Trace({1.0}, {1.0}).is_binary());
  EXPECT_FALSE(Trace({1.0}, {0.5}).is_integral());
}

TEST(CostOfTest, AllGrid) {
  const Trace trace({1.0, 1.0}, {1.0, 1.0});
  const Schedule schedule{{0.0, 0.0}, {1.0, 1.0}};
  const CostBreakdown cost = CostOf(schedule, trace, Params(2.0, 4.0));
  EXPECT_DOUBLE_EQ(cost.volume, 2.0);
  EXPECT_DOUBLE_EQ(cost.peak, 4.0);
  EXPECT_DOUBLE_EQ(cost.local, 0.0);
  EXPECT_DOUBLE_EQ(cost.total, 6.0);
}

TEST(CostOfTest, AllLocalHasNoPeakCharge) {
  const Trace trace({1.0, 1.0}, {1.0, 1.0});
  const Schedule schedule{{1.0, 1.0}, {0.0, 0.0}};
  const CostBreakdown cost = CostOf(schedule, trace, Params(2.0, 4.0));
  EXPECT_DOUBLE_EQ(cost.peak, 0.0);
  EXPECT_DOUBLE_EQ(cost.local, 4.0);
  EXPECT_DOUBLE_EQ(cost.total, 4.0);
}

TEST(CostOfTest, ThreeSlotHandTrace) {
  const Trace trace({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
  const Schedule schedule{{1.0, 0.0, 0.0}, {0.0, 1.0, 1.0}};
  EXPECT_DOUBLE_EQ(CostOf(schedule, trace, Params(2.0, 2.0)).total, 6.0);
}

TEST(CostOfTest, NamesTheFirstOffendingSlot) {
  const Trace trace({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
  const Schedule short_schedule{{1.0}, {0.0}};
  EXPECT_THROW(CostOf(short_schedule, trace, Params(2.0, 2.0)),
               StructuralError);
  const Schedule unserved{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  try {
    CostOf(unserved, trace, Params(2.0, 2.0));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("slot 2"), std::string::npos)
        << e.what();
  }
  const Schedule over_capacity{{2.0, 1.0, 1.0}, {0.0, 0.0, 0.0}};
  EXPECT_THROW(CostOf(over_capacity, trace, Params(2.0, 2.0, 1.0)),
               ValidationError);
  BillingParams ramped = Params(2.0, 2.0, 3.0);
  ramped.ramp = 1.0;
  const Schedule jump{{0.0, 3.0, 0.0}, {1.0, 0.0, 1.0}};
  EXPECT_THROW(CostOf(jump, Trace({1.0, 1.0, 1.0}, {1.0, 3.0, 1.0}), ramped),
               ValidationError);
}

TEST(CostOfTest, MonotoneInEitherSource) {
  const Trace trace({1.0, 3.0, 2.0}, {1.0, 2.0, 1.0});
  const BillingParams params = Params(3.0, 5.0, 5.0);
  const Schedule base{{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}};
  const double total = CostOf(base, trace, params).total;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    Schedule more_grid = base;
    more_grid.grid[t] += 0.5;
    EXPECT_GE(CostOf(more_grid, trace, params).total, total);
    Schedule more_local = base;
    more_local.generator[t] += 0.5;
    EXPECT_GE(CostOf(more_local, trace, params).total, total);
  }
}

TEST(SigmaTest, Examples) {
  EXPECT_DOUBLE_EQ(Sigma(Trace({1.0, 1.0}, {1.0, 1.0}), Params(2.0, 4.0)), 0.5);
  EXPECT_DOUBLE_EQ(Sigma(Trace({1.0, 1.0}, {0.0, 0.0}), Params(2.0, 4.0)), 0.0);
  EXPECT_DOUBLE_EQ(
      Sigma(Trace({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}), Params(2.0, 2.0)), 1.5);
}

TEST(SigmaTest, LinearInDemand) {
  const Trace trace({1.0, 2.5, 0.5}, {1.0, 3.0, 2.0});
  const BillingParams params = Params(3.0, 7.0);
  const double sigma = Sigma(trace, params);
  for (double k : {0.0, 0.5, 2.0, 10.0}) {
    std::vector<double> scaled(trace.demands().begin(), trace.demands().end());
    for (double& d : scaled) d *= k;
    EXPECT_NEAR(Sigma(trace.with_demands(scaled), params), k * sigma,
                kTolerance);
  }
}

TEST(SigmaTest, RejectsGeneratorCheaperThanGrid) {
  EXPECT_THROW(Sigma(Trace({3.0}, {1.0}), Params(2.0, 4.0)), DomainError);
}

TEST(BetaTest, Examples) {
  EXPECT_DOUBLE_EQ(Beta(Trace({1.0, 2.0}, {1.0, 1.0}), Params(2.0, 4.0)), 0.5);
  EXPECT_DOUBLE_EQ(Beta(Trace({2.0, 2.0}, {1.0, 1.0}), Params(2.0, 4.0)), 1.0);
  EXPECT_NEAR(Beta(Trace({13.69, 64.62}, {1.0, 1.0}), Params(64.62, 6462.0)),
              0.2118, 1e-4);
}

TEST(BillingParamsTest, Validate) {
  EXPECT_NO_THROW(Params(2.0, 4.0, 1.0).Validate());
  EXPECT_THROW(Params(2.0, 0.0).Validate(), DomainError);
  EXPECT_THROW(Params(0.0, 4.0).Validate(), DomainError);
  EXPECT_THROW(Params(2.0, 4.0, 0.5).Validate(), DomainError);
  BillingParams negative_ramp = Params(2.0, 4.0);
  negative_ramp.ramp = -1.0;
  EXPECT_THROW(negative_ramp.Validate(), DomainError);
}

TEST(CostReductionTest, Examples) {
  const Trace trace({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
  const BillingParams params = Params(2.0, 2.0);
  EXPECT_DOUBLE_EQ(GridOnlyCost(trace, params), 5.0);
  EXPECT_DOUBLE_EQ(CostReduction(5.0, trace, params), 0.0);
  EXPECT_DOUBLE_EQ(CostReduction(0.0, trace, params), 1.0);
  EXPECT_NEAR(CostReduction(6.0, trace, params), -0.2, kTolerance);
  EXPECT_THROW(CostReduction(1.0, Trace({1.0}, {0.0}), params),
               UndefinedRatioError);
}

}  // namespace
}  // namespace peakaware
