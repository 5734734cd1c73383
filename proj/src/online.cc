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

#include "peakaware/online.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "peakaware/error.h"

namespace peakaware {
namespace {

constexpr double kE = std::numbers::e;

void CheckBeta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in (0, 1]");
  }
}

// Atoms that sample before the density segment.
bool IsLeading(const Atom& atom, double lo) {
  return atom.location.kind() == SwitchPolicy::Kind::kNegOne ||
         (atom.location.is_finite() && atom.location.value() < lo);
}

}  // namespace

SwitchPolicy SwitchPolicy::Finite(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("finite threshold must be a non-negative number");
  }
  return SwitchPolicy(Kind::kFinite, value);
}

double SwitchPolicy::value() const {
  if (kind_ == Kind::kInfinity) return std::numeric_limits<double>::infinity();
  return value_;
}

std::string SwitchPolicy::ToString() const {
  switch (kind_) {
    case Kind::kNegOne:
      return "-1";
    case Kind::kInfinity:
      return "inf";
    case Kind::kFinite:
      break;
  }
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

double DistributionSpec::ContinuousMass() const {
  if (coefficient == 0.0 || hi <= lo) return 0.0;
  return coefficient * (std::exp(hi) - std::exp(lo));
}

double DistributionSpec::TotalMass() const {
  double total = ContinuousMass();
  for (const Atom& atom : atoms) total += atom.mass;
  return total;
}

double DistributionSpec::AtomMass(SwitchPolicy::Kind kind) const {
  double mass = 0.0;
  for (const Atom& atom : atoms) {
    if (atom.location.kind() == kind) mass += atom.mass;
  }
  return mass;
}

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBed:
      return "BED";
    case Algorithm::kLambdaBed:
      return "lambdaBED";
    case Algorithm::kRed:
      return "RED";
    case Algorithm::kLambdaRed:
      return "lambdaRED";
    case Algorithm::kNaiveLambdaRed:
      return "naiveLambdaRED";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm algorithm :
       {Algorithm::kBed, Algorithm::kLambdaBed, Algorithm::kRed,
        Algorithm::kLambdaRed, Algorithm::kNaiveLambdaRed}) {
    if (name == AlgorithmName(algorithm)) return algorithm;
  }
  throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

bool IsRandomized(Algorithm algorithm) {
  return algorithm == Algorithm::kRed || algorithm == Algorithm::kLambdaRed ||
         algorithm == Algorithm::kNaiveLambdaRed;
}

bool UsesPrediction(Algorithm algorithm) {
  return algorithm == Algorithm::kLambdaBed ||
         algorithm == Algorithm::kLambdaRed ||
         algorithm == Algorithm::kNaiveLambdaRed;
}

RunRecord RunThreshold(const Trace& trace, const BillingParams& params,
                       SwitchPolicy policy) {
  CheckPairing(trace, params);
  if (!trace.is_binary()) {
    throw DomainError("threshold algorithms require 0/1 demand");
  }
  RunRecord record;
  record.policy = policy;
  record.schedule = Schedule::Zero(trace.size());
  const double threshold = policy.value() * params.peak_price;
  bool switched = policy.kind() == SwitchPolicy::Kind::kNegOne;
  if (switched) record.switch_slot = 0;

  double premium = 0.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const double demand = trace.demand(t);
    premium += (params.generator_cost - trace.price(t)) * demand;
    if (!switched && policy.is_finite() && premium >= threshold) {
      switched = true;
      record.switch_slot = t;
    }
    if (switched) {
      record.schedule.grid[t] = demand;
    } else {
      record.schedule.generator[t] = demand;
    }
  }
  record.cumulative_premium = premium;
  return record;
}

SwitchPolicy BedPolicy() { return SwitchPolicy::Finite(1.0); }

SwitchPolicy LambdaBedPolicy(double sigma_hat, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("lambdaBED needs lambda in (0, 1]");
  }
  return SwitchPolicy::Finite(sigma_hat > 1.0 ? lambda : 1.0 / lambda);
}

DistributionSpec RedDistribution(double beta) {
  CheckBeta(beta);
  const double norm = kE - 1.0 + beta;
  DistributionSpec spec;
  spec.coefficient = 1.0 / norm;
  spec.lo = 0.0;
  spec.hi = 1.0;
  spec.atoms.push_back({SwitchPolicy::Infinity(), beta / norm});
  return spec;
}

DistributionSpec LambdaRedDistribution(double sigma_hat, double lambda,
                                       double beta) {
  CheckBeta(beta);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambdaRED needs lambda in [0, 1]");
  }
  const double norm = kE - 1.0 + beta;
  const double hedge = (1.0 - lambda) * (kE - 1.0) + beta;
  DistributionSpec spec;
  spec.coefficient = lambda / norm;
  spec.lo = 0.0;
  spec.hi = 1.0;
  if (sigma_hat > 1.0) {
    spec.atoms.push_back({SwitchPolicy::NegOne(), hedge * (1.0 - lambda) / norm});
    spec.atoms.push_back({SwitchPolicy::Infinity(), hedge * lambda / norm});
  } else {
    spec.atoms.push_back({SwitchPolicy::Infinity(), hedge / norm});
  }
  return spec;
}

DistributionSpec NaiveRedDistribution(double sigma_hat, double lambda,
                                      double beta) {
  CheckBeta(beta);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("naive lambdaRED needs lambda in (0, 1)");
  }
  const double hi = sigma_hat > 1.0 ? lambda : 1.0 / lambda;
  const double norm = std::exp(hi) - 1.0 + beta;
  DistributionSpec spec;
  spec.coefficient = 1.0 / norm;
  spec.lo = 0.0;
  spec.hi = hi;
  spec.atoms.push_back({SwitchPolicy::Infinity(), beta / norm});
  return spec;
}

SwitchPolicy Sample(const DistributionSpec& spec, double uniform) {
  if (std::abs(spec.TotalMass() - 1.0) > kNormalizationTolerance) {
    throw ValidationError("distribution is not normalized");
  }
  for (const Atom& atom : spec.atoms) {
    if (atom.mass < 0.0) throw ValidationError("negative probability mass");
  }
  if (!(uniform >= 0.0 && uniform < 1.0)) {
    throw DomainError("uniform draw must lie in [0, 1)");
  }

  double cumulative = 0.0;
  for (const Atom& atom : spec.atoms) {
    if (!IsLeading(atom, spec.lo)) continue;
    cumulative += atom.mass;
    if (uniform < cumulative) return atom.location;
  }
  const double continuous = spec.ContinuousMass();
  if (uniform < cumulative + continuous) {
    const double residual = uniform - cumulative;
    const double s =
        std::log(std::exp(spec.lo) + residual / spec.coefficient);
    return SwitchPolicy::Finite(std::clamp(s, spec.lo, spec.hi));
  }
  cumulative += continuous;
  const Atom* last = nullptr;
  for (const Atom& atom : spec.atoms) {
    if (IsLeading(atom, spec.lo) || atom.mass <= 0.0) continue;
    last = &atom;
    cumulative += atom.mass;
    if (uniform < cumulative) return atom.location;
  }
  // Rounding left `uniform` just past the total; the tail owns it.
  if (last != nullptr) return last->location;
  return SwitchPolicy::Finite(spec.hi);
}

double UniformFromSeed(std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

SwitchPolicy SelectPolicy(const Trace& trace, const BillingParams& params,
                          Algorithm algorithm, double lambda, double sigma_hat,
                          std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kBed:
      return BedPolicy();
    case Algorithm::kLambdaBed:
      return LambdaBedPolicy(sigma_hat, lambda);
    case Algorithm::kRed:
      return Sample(RedDistribution(Beta(trace, params)),
                    UniformFromSeed(seed));
    case Algorithm::kLambdaRed:
      return Sample(
          LambdaRedDistribution(sigma_hat, lambda, Beta(trace, params)),
          UniformFromSeed(seed));
    case Algorithm::kNaiveLambdaRed:
      return Sample(
          NaiveRedDistribution(sigma_hat, lambda, Beta(trace, params)),
          UniformFromSeed(seed));
  }
  throw DomainError("unknown algorithm");
}

RunRecord RunAlgorithm(const Trace& trace, const BillingParams& params,
                       Algorithm algorithm, double lambda, double sigma_hat,
                       std::uint64_t seed) {
  return RunThreshold(
      trace, params,
      SelectPolicy(trace, params, algorithm, lambda, sigma_hat, seed));
}

}  // namespace peakaware
