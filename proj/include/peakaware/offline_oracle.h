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

// Exact offline optima, used as the denominator of every empirical
// competitive ratio.

#ifndef PEAKAWARE_OFFLINE_ORACLE_H_
#define PEAKAWARE_OFFLINE_ORACLE_H_

#include "peakaware/trace.h"

namespace peakaware {

struct OracleResult {
  Schedule schedule;
  Money total = 0.0;        // CostOf(schedule).total
  double peak_level = 0.0;  // Grid cap m the optimum was found at.
};

// 0/1 demand without ramp: all grid when sigma > 1, all local otherwise
// (sigma == 1 goes local). Throws DomainError on non-binary demand or when a
// ramp limit is set.
OracleResult OptimalBasic(const Trace& trace, const BillingParams& params);

// General demand without ramp. Enumerates the grid cap m over the capacity
// floor max(0, max d - C), zero, and every distinct demand value; for each m
// serves min(d(t), m) from the grid and the rest locally. The bill is
// piecewise linear in m with breakpoints at demand values, so one candidate
// is optimal. Ties go to the smaller m.
OracleResult OptimalGeneral(const Trace& trace, const BillingParams& params);

// Integer demand, integer C and R. For every integer cap m in [0, max d] an
// exact dynamic program over generator levels u(t) in [max(0, d(t) - m), C]
// with |u(t) - u(t-1)| <= R and u before the first slot equal to 0. The
// generator may run above demand: with a binding ramp, pre-ramping ahead of a
// spike can lower the peak charge.
OracleResult OptimalWithRamp(const Trace& trace, const BillingParams& params);

}  // namespace peakaware

#endif  // PEAKAWARE_OFFLINE_ORACLE_H_
