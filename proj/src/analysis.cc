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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "peakaware/error.h"

namespace peakaware {
namespace {

constexpr double kE = std::numbers::e;

void CheckBeta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in (0, 1]");
  }
}

void CheckLambda(double lambda, bool allow_zero) {
  const bool ok = allow_zero ? (lambda >= 0.0 && lambda <= 1.0)
                             : (lambda > 0.0 && lambda <= 1.0);
  if (!ok) throw DomainError("lambda out of range");
}

double Phi(double beta) { return 1.0 / (kE - 1.0 + beta); }

// K in the sigma > 1 branch of H.
double Excess(double sigma, double beta) { return (sigma - 1.0) * beta + 1.0; }

double Integrate(const DistributionSpec& spec, double lo, double hi,
                 double sigma, double beta, double* error) {
  auto integrand = [&](double s) {
    return spec.coefficient * std::exp(s) *
           H(SwitchPolicy::Finite(std::max(0.0, s)), sigma, beta);
  };
  double piece_error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          integrand, lo, hi, /*max_depth=*/15, /*tolerance=*/1e-12,
          &piece_error);
  *error += piece_error;
  return value;
}

}  // namespace

double H(SwitchPolicy s, double sigma, double beta) {
  CheckBeta(beta);
  if (!(sigma >= 0.0)) throw DomainError("sigma must be non-negative");
  if (sigma == 0.0) return 1.0;
  const bool above = s.kind() == SwitchPolicy::Kind::kInfinity ||
                     (s.is_finite() && s.value() > sigma);
  if (sigma <= 1.0) {
    if (above) return 1.0;
    return 1.0 + (1.0 - sigma + s.value()) * (1.0 - beta) / sigma;
  }
  const double k = Excess(sigma, beta);
  if (above) return 1.0 + (sigma - 1.0) * (1.0 - beta) / k;
  return 1.0 + s.value() * (1.0 - beta) / k;
}

double WorstCaseCr(double s, double beta) {
  CheckBeta(beta);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("threshold must be a positive number");
  }
  if (s <= 1.0) return 1.0 + (1.0 - beta) / s;
  return 1.0 + s * (1.0 - beta) / Excess(s, beta);
}

Bounds DetBounds(double lambda, double beta) {
  CheckBeta(beta);
  CheckLambda(lambda, /*allow_zero=*/false);
  return {1.0 + (1.0 - beta) / lambda, 1.0 + lambda};
}

Bounds RandBounds(double lambda, double beta) {
  CheckBeta(beta);
  CheckLambda(lambda, /*allow_zero=*/true);
  const double phi = Phi(beta);
  const double robustness =
      phi * (kE + (1.0 - lambda) * (1.0 - beta) * (kE - 1.0 + beta) / beta);
  const double consistency =
      phi * (kE + (lambda - 1.0) * (1.0 - beta) +
             lambda * (1.0 - lambda) * (1.0 - beta) * (kE - 1.0) / beta);
  return {robustness, consistency};
}

Bounds NaiveBounds(double lambda, double beta) {
  CheckBeta(beta);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("naive bounds need lambda in (0, 1)");
  }
  const double wide = std::exp(1.0 / lambda);
  const double narrow = std::exp(lambda);
  const double robustness =
      std::max(std::min(1.0 / beta, 1.0 / lambda) * wide / (wide - 1.0 + beta),
               narrow / (narrow - 1.0 + beta));
  return {robustness, 1.0 / beta};
}

double ExpectedRatio(const DistributionSpec& spec, double sigma, double beta) {
  if (std::abs(spec.TotalMass() - 1.0) > kNormalizationTolerance) {
    throw ValidationError("distribution is not normalized");
  }
  double total = 0.0;
  for (const Atom& atom : spec.atoms) {
    if (atom.mass != 0.0) total += atom.mass * H(atom.location, sigma, beta);
  }
  if (spec.coefficient == 0.0 || spec.hi <= spec.lo) return total;

  std::vector<double> cuts = {spec.lo};
  if (sigma > spec.lo && sigma < spec.hi) cuts.push_back(sigma);
  cuts.push_back(spec.hi);
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += Integrate(spec, cuts[i], cuts[i + 1], sigma, beta, &error);
  }
  if (!(error <= kQuadratureTolerance)) {
    std::ostringstream message;
    message << "quadrature error estimate " << error << " exceeds "
            << kQuadratureTolerance;
    throw NumericError(message.str());
  }
  return total;
}

double ClosedFormExpectedRatio(bool predicted_high, double sigma,
                               double lambda, double beta) {
  CheckBeta(beta);
  CheckLambda(lambda, /*allow_zero=*/true);
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const double phi = Phi(beta);
  const double hedge = (1.0 - lambda) * (kE - 1.0) + beta;
  const double k = Excess(sigma, beta);
  const double base = kE - 1.0 + beta + lambda * (1.0 - beta);
  if (predicted_high) {
    if (sigma <= 1.0) {
      return phi * (base - (1.0 - beta) * (1.0 - lambda) * hedge);
    }
    return phi * (base + lambda * (1.0 - lambda) * (1.0 - beta) *
                             (sigma - 1.0) * (kE - 1.0) / k);
  }
  if (sigma > 1.0) {
    return phi * (kE + (1.0 - beta) * (1.0 - lambda) *
                           ((sigma - 1.0) * (kE - 1.0) - 1.0) / k);
  }
  return phi * base;
}

double HighHighClosedFormExcess(double sigma, double lambda, double beta) {
  const double hedge = (1.0 - lambda) * (kE - 1.0) + beta;
  return Phi(beta) * (1.0 - beta) * (1.0 - lambda) * hedge /
         Excess(sigma, beta);
}

WorstCaseInstance MakeWorstCaseInstance(double s, double beta,
                                        Money peak_price,
                                        std::size_t slots_per_unit) {
  CheckBeta(beta);
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("threshold must be a positive number");
  }
  if (!(peak_price > 0.0)) throw DomainError("peak price must be positive");
  if (slots_per_unit == 0) throw DomainError("need at least one slot per unit");

  const auto demand_slots = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(s * static_cast<double>(slots_per_unit))));
  const std::size_t slots = demand_slots + 1;
  std::vector<double> demands(slots, 1.0);
  demands.back() = 0.0;

  BillingParams params;
  params.peak_price = peak_price;
  params.capacity = 1.0;
  if (beta == 1.0) {
    params.generator_cost = 1.0;
    Trace trace(std::vector<double>(slots, 1.0), std::move(demands));
    return {std::move(trace), params, 0.0};
  }

  // Scale p_g so that the premium summed slot by slot, exactly as the online
  // policies accumulate it, reaches s p_m on the last demand slot, and so that
  // the reported sigma is not rounded below s (h jumps at s = sigma).
  double generator_cost =
      s * peak_price / (static_cast<double>(demand_slots) * (1.0 - beta));
  // Rounding in the running sum can leave it many ulps short, so the upward
  // step doubles until the target is met; the overshoot stays within a few
  // times the shortfall.
  double bump = std::numeric_limits<double>::epsilon();
  for (int attempt = 0;; ++attempt) {
    const double premium = generator_cost - beta * generator_cost;
    double sum = 0.0;
    for (std::size_t t = 0; t < demand_slots; ++t) sum += premium;
    if (sum >= s * peak_price && sum / peak_price >= s) break;
    if (attempt == 64) throw NumericError("could not reach the target sigma");
    generator_cost *= 1.0 + bump;
    bump *= 2.0;
  }
  params.generator_cost = generator_cost;
  Trace trace(std::vector<double>(slots, beta * generator_cost),
              std::move(demands));
  const double sigma = Sigma(trace, params);
  return {std::move(trace), params, sigma};
}

double EmpiricalCr(Money alg_total, Money opt_total) {
  if (!(opt_total > 0.0)) {
    throw UndefinedRatioError("optimal cost is zero; ratio undefined");
  }
  return alg_total / opt_total;
}

}  // namespace peakaware
