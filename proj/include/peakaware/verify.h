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

// Numerical checks of the competitive-ratio formulas over parameter grids.

#ifndef PEAKAWARE_VERIFY_H_
#define PEAKAWARE_VERIFY_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace peakaware {

struct VerifyGrids {
  // Points spread evenly over [0.05, 0.95] for lambda and beta, and over
  // (0, 10] for sigma (step 10 / sigma_points). At least 5 each.
  int lambda_points = 19;
  int beta_points = 19;
  int sigma_points = 200;
  int threads = 0;
};

struct CheckResult {
  std::string name;
  std::string description;
  double max_violation = 0.0;  // worst amount by which the claim fails
  double tolerance = 0.0;
  std::size_t evaluations = 0;
  std::string worst_case;  // parameters at max_violation
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Throws DomainError when a grid has fewer than 5 points.
VerifyReport RunVerification(const VerifyGrids& grids);

// Fixed-width table, one check per line, then a summary line.
void PrintVerifyReport(std::ostream& out, const VerifyReport& report);
void WriteVerifyCsv(std::ostream& out, const VerifyReport& report);

}  // namespace peakaware

#endif  // PEAKAWARE_VERIFY_H_
