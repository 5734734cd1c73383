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

#include "peakaware/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>

#include "peakaware/analysis.h"
#include "peakaware/error.h"
#include "peakaware/offline_oracle.h"
#include "peakaware/online.h"
#include "peakaware/parallel.h"

namespace peakaware {
namespace {

constexpr double kE = std::numbers::e;

std::vector<double> Spread(int points, double lo, double hi) {
  std::vector<double> values(points);
  for (int i = 0; i < points; ++i) {
    values[i] = lo + (hi - lo) * i / (points - 1);
  }
  return values;
}

std::vector<double> SigmaGrid(int points) {
  std::vector<double> values(points);
  for (int i = 0; i < points; ++i) values[i] = 10.0 * (i + 1) / points;
  return values;
}

std::string Describe(std::initializer_list<std::pair<const char*, double>> args) {
  std::string text;
  char buffer[64];
  for (const auto& [name, value] : args) {
    std::snprintf(buffer, sizeof(buffer), "%s%s=%.6g", text.empty() ? "" : " ",
                  name, value);
    text += buffer;
  }
  return text;
}

// Largest violation seen so far; ties keep the earliest.
struct Worst {
  double violation = -std::numeric_limits<double>::infinity();
  std::string where;
  std::size_t count = 0;

  void Observe(double v, const std::function<std::string()>& where_fn) {
    ++count;
    if (v > violation) {
      violation = v;
      where = where_fn();
    }
  }
  void Merge(const Worst& other) {
    count += other.count;
    if (other.violation > violation) {
      violation = other.violation;
      where = other.where;
    }
  }
};

CheckResult Finish(std::string name, std::string description, double tolerance,
                   const Worst& worst) {
  CheckResult result;
  result.name = std::move(name);
  result.description = std::move(description);
  result.tolerance = tolerance;
  result.max_violation = worst.count == 0 ? 0.0 : worst.violation;
  result.evaluations = worst.count;
  result.worst_case = worst.where;
  result.passed = worst.count > 0 && result.max_violation <= tolerance;
  return result;
}

// Runs body(i, &worst) for every i in parallel and merges in index order, so
// the result does not depend on scheduling.
Worst Sweep(std::size_t count, int threads,
            const std::function<void(std::size_t, Worst*)>& body) {
  std::vector<Worst> partial(count);
  ParallelFor(count, threads, [&](std::size_t i) { body(i, &partial[i]); });
  Worst total;
  for (const Worst& w : partial) total.Merge(w);
  return total;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerifyReport RunVerification(const VerifyGrids& grids) {
  if (grids.lambda_points < 5 || grids.beta_points < 5 ||
      grids.sigma_points < 5) {
    throw DomainError("verification grids need at least 5 points per axis");
  }
  const std::vector<double> lambdas = Spread(grids.lambda_points, 0.05, 0.95);
  const std::vector<double> betas = Spread(grids.beta_points, 0.05, 0.95);
  const std::vector<double> sigmas = SigmaGrid(grids.sigma_points);
  std::vector<double> lambdas_with_ends = lambdas;
  lambdas_with_ends.insert(lambdas_with_ends.begin(), 0.0);
  lambdas_with_ends.push_back(1.0);
  const int threads = grids.threads;
  VerifyReport report;

  // h against threshold policies run on instances built to have ratio sigma.
  {
    const std::vector<double> tenths = Spread(20, 0.1, 2.0);
    const Worst worst = Sweep(betas.size(), threads, [&](std::size_t b,
                                                         Worst* w) {
      const double beta = betas[b];
      for (double sigma : tenths) {
        const WorstCaseInstance instance =
            MakeWorstCaseInstance(sigma, beta, 100.0, 200);
        const Money opt = OptimalBasic(instance.trace, instance.params).total;
        for (double s : tenths) {
          const RunRecord run = RunThreshold(instance.trace, instance.params,
                                             SwitchPolicy::Finite(s));
          const double ratio = EmpiricalCr(
              CostOf(run.schedule, instance.trace, instance.params).total, opt);
          w->Observe(ratio - H(SwitchPolicy::Finite(s), instance.sigma, beta),
                     [&] { return Describe({{"s", s}, {"sigma", sigma},
                                            {"beta", beta}}); });
        }
      }
    });
    report.checks.push_back(Finish(
        "h_bounds_constructed_instances",
        "threshold-s ratio on sigma-instances <= h(s, sigma, beta)", 1e-6,
        worst));
  }

  // Expected ratios of both lambdaRED branches against the bounds.
  struct Case {
    double lambda, beta, sigma;
    bool high;
    double expected;
  };
  std::vector<Case> cases;
  for (double lambda : lambdas_with_ends) {
    for (double beta : betas) {
      for (double sigma : sigmas) {
        for (bool high : {false, true}) {
          cases.push_back({lambda, beta, sigma, high, 0.0});
        }
      }
    }
  }
  ParallelFor(cases.size(), threads, [&](std::size_t i) {
    Case& c = cases[i];
    c.expected = ExpectedRatio(
        LambdaRedDistribution(c.high ? 2.0 : 0.0, c.lambda, c.beta), c.sigma,
        c.beta);
  });
  auto where = [](const Case& c) {
    return Describe({{"lambda", c.lambda}, {"beta", c.beta},
                     {"sigma", c.sigma}, {"sigma_hat_high", c.high ? 1.0 : 0.0}});
  };
  auto over_cases = [&](const std::function<bool(const Case&)>& include,
                        const std::function<double(const Case&)>& violation) {
    Worst worst;
    for (const Case& c : cases) {
      if (include(c)) worst.Observe(violation(c), [&] { return where(c); });
    }
    return worst;
  };

  report.checks.push_back(Finish(
      "rand_robustness",
      "E[h] under lambdaRED <= robustness bound for every sigma", 1e-9,
      over_cases([](const Case&) { return true; },
                 [](const Case& c) {
                   return c.expected - RandBounds(c.lambda, c.beta).robustness;
                 })));
  report.checks.push_back(Finish(
      "rand_consistency",
      "E[h] <= consistency bound when the prediction is on the right side",
      1e-9,
      over_cases([](const Case& c) { return c.high == (c.sigma > 1.0); },
                 [](const Case& c) {
                   return c.expected - RandBounds(c.lambda, c.beta).consistency;
                 })));

  struct ClosedFormCheck {
    const char* name;
    const char* description;
    bool high;
    bool sigma_above_one;
  };
  for (const ClosedFormCheck& check :
       {ClosedFormCheck{"closed_form_high_low",
                        "quadrature = closed form, sigma_hat > 1, sigma <= 1",
                        true, false},
        ClosedFormCheck{"closed_form_high_high",
                        "quadrature = published closed form, sigma_hat > 1, "
                        "sigma > 1",
                        true, true},
        ClosedFormCheck{"closed_form_low_high",
                        "quadrature = closed form, sigma_hat <= 1, sigma > 1",
                        false, true},
        ClosedFormCheck{"closed_form_low_low",
                        "quadrature = closed form, sigma_hat <= 1, sigma <= 1",
                        false, false}}) {
    report.checks.push_back(Finish(
        check.name, check.description, 1e-6,
        over_cases(
            [&](const Case& c) {
              return c.high == check.high &&
                     (c.sigma > 1.0) == check.sigma_above_one;
            },
            [](const Case& c) {
              return std::abs(c.expected - ClosedFormExpectedRatio(
                                               c.high, c.sigma, c.lambda,
                                               c.beta));
            })));
  }
  report.checks.push_back(Finish(
      "closed_form_high_high_upper",
      "quadrature <= published closed form, sigma_hat > 1, sigma > 1", 1e-9,
      over_cases([](const Case& c) { return c.high && c.sigma > 1.0; },
                 [](const Case& c) {
                   return c.expected - ClosedFormExpectedRatio(
                                           true, c.sigma, c.lambda, c.beta);
                 })));
  report.checks.push_back(Finish(
      "closed_form_high_high_exact",
      "quadrature = published form minus the NegOne-atom term", 1e-6,
      over_cases([](const Case& c) { return c.high && c.sigma > 1.0; },
                 [](const Case& c) {
                   return std::abs(
                       c.expected -
                       (ClosedFormExpectedRatio(true, c.sigma, c.lambda,
                                                c.beta) -
                        HighHighClosedFormExcess(c.sigma, c.lambda, c.beta)));
                 })));

  {
    Worst worst;
    for (double beta : betas) {
      const double red = kE / (kE - 1.0 + beta);
      const Bounds bounds = RandBounds(1.0, beta);
      worst.Observe(std::max(std::abs(bounds.robustness - red),
                             std::abs(bounds.consistency - red)),
                    [&] { return Describe({{"beta", beta}}); });
    }
    report.checks.push_back(Finish("rand_lambda_one",
                                   "lambda = 1 bounds equal e / (e - 1 + beta)",
                                   1e-9, worst));
  }
  {
    Worst worst;
    for (double beta : betas) {
      worst.Observe(std::abs(RandBounds(0.0, beta).consistency - 1.0),
                    [&] { return Describe({{"beta", beta}}); });
    }
    report.checks.push_back(Finish("rand_lambda_zero_consistency",
                                   "lambda = 0 consistency equals 1", 1e-9,
                                   worst));
  }
  {
    Worst worst;
    for (double beta : betas) {
      if (beta > 0.2 + 1e-12) continue;
      for (double lambda : lambdas) {
        if (lambda < 0.1 - 1e-12 || lambda > 0.9 + 1e-12) continue;
        worst.Observe(RandBounds(lambda, beta).consistency -
                          NaiveBounds(lambda, beta).consistency,
                      [&] { return Describe({{"lambda", lambda}, {"beta", beta}}); });
      }
    }
    report.checks.push_back(Finish(
        "naive_consistency_dominates",
        "naive consistency >= lambdaRED consistency for beta <= 0.2", 0.0,
        worst));
  }
  {
    Worst worst;
    for (double lambda : lambdas) {
      if (lambda < 0.1 - 1e-12 || lambda > 0.9 + 1e-12) continue;
      const double naive = NaiveBounds(lambda, 0.1).consistency;
      const double gap = naive - RandBounds(lambda, 0.1).consistency;
      worst.Observe(std::max(1.0 - gap, std::abs(naive - 10.0) - 1e-9),
                    [&] { return Describe({{"lambda", lambda}}); });
    }
    report.checks.push_back(Finish(
        "naive_gap_beta_0_1",
        "at beta = 0.1 naive consistency is 10 and exceeds lambdaRED's by >= 1",
        0.0, worst));
  }
  {
    const std::vector<double> fine = Spread(181, 0.05, 0.95);
    Worst robustness;
    Worst consistency;
    for (double beta : betas) {
      for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
        const Bounds a = DetBounds(fine[i], beta);
        const Bounds b = DetBounds(fine[i + 1], beta);
        auto at = [&] { return Describe({{"lambda", fine[i]}, {"beta", beta}}); };
        robustness.Observe(b.robustness - a.robustness, at);
        consistency.Observe(a.consistency - b.consistency, at);
      }
    }
    report.checks.push_back(Finish("det_robustness_monotone",
                                   "deterministic robustness non-increasing "
                                   "in lambda",
                                   0.0, robustness));
    report.checks.push_back(Finish("det_consistency_monotone",
                                   "deterministic consistency non-decreasing "
                                   "in lambda",
                                   0.0, consistency));
  }
  {
    Worst worst;
    for (double beta : betas) {
      for (double s : sigmas) {
        double peak = 0.0;
        for (double sigma : sigmas) {
          peak = std::max(peak, H(SwitchPolicy::Finite(s), sigma, beta));
        }
        worst.Observe(peak - WorstCaseCr(s, beta),
                      [&] { return Describe({{"s", s}, {"beta", beta}}); });
      }
    }
    report.checks.push_back(Finish("worst_case_cr_dominates_h",
                                   "max over sigma of h(s, sigma) <= "
                                   "worst_case_cr(s)",
                                   1e-12, worst));
  }
  return report;
}

void PrintVerifyReport(std::ostream& out, const VerifyReport& report) {
  char line[512];
  std::size_t failed = 0;
  for (const CheckResult& check : report.checks) {
    if (!check.passed) ++failed;
    std::snprintf(line, sizeof(line), "%-4s %-32s max_violation=%-12.4g "
                  "tol=%-8.1g n=%-7zu %s\n",
                  check.passed ? "PASS" : "FAIL", check.name.c_str(),
                  check.max_violation, check.tolerance, check.evaluations,
                  check.passed ? "" : ("at " + check.worst_case).c_str());
    out << line;
  }
  out << report.checks.size() - failed << "/" << report.checks.size()
      << " checks passed\n";
}

void WriteVerifyCsv(std::ostream& out, const VerifyReport& report) {
  out << "check,passed,max_violation,tolerance,evaluations,worst_case,"
         "description\n";
  char number[64];
  for (const CheckResult& check : report.checks) {
    out << check.name << ',' << (check.passed ? "true" : "false") << ',';
    std::snprintf(number, sizeof(number), "%.17g", check.max_violation);
    out << number << ',';
    std::snprintf(number, sizeof(number), "%.17g", check.tolerance);
    out << number << ',' << check.evaluations << ",\"" << check.worst_case
        << "\",\"" << check.description << "\"\n";
  }
}

}  // namespace peakaware
