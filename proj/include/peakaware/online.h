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

// Online threshold algorithms for 0/1 demand. Every algorithm here runs the
// generator first and moves to the grid once the cumulative premium
// S(t) = sum_{k<=t} (p_g - p(k)) d(k) reaches s * p_m; they differ only in how
// the multiplier s is chosen (fixed, prediction-dependent or sampled).

#ifndef PEAKAWARE_ONLINE_H_
#define PEAKAWARE_ONLINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peakaware/trace.h"

namespace peakaware {

// Threshold multiplier s. NegOne buys from the grid from the first slot;
// Infinity never switches.
class SwitchPolicy {
 public:
  enum class Kind { kNegOne, kFinite, kInfinity };

  static SwitchPolicy NegOne() { return SwitchPolicy(Kind::kNegOne, -1.0); }
  static SwitchPolicy Infinity() { return SwitchPolicy(Kind::kInfinity, 0.0); }
  // Throws DomainError unless value >= 0 and finite.
  static SwitchPolicy Finite(double value);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  // -1 for NegOne, the multiplier for Finite, +inf for Infinity.
  double value() const;

  std::string ToString() const;

  friend bool operator==(const SwitchPolicy&, const SwitchPolicy&) = default;

 private:
  SwitchPolicy(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

struct RunRecord {
  Schedule schedule;
  // First grid-served slot; empty when the threshold is never reached.
  std::optional<std::size_t> switch_slot;
  SwitchPolicy policy = SwitchPolicy::Infinity();
  // S(T), accumulated over every slot regardless of who served it.
  double cumulative_premium = 0.0;
};

struct Atom {
  SwitchPolicy location;
  double mass = 0.0;
};

// Mixed distribution over s: point masses plus a density c * e^s on [lo, hi].
struct DistributionSpec {
  std::vector<Atom> atoms;
  double coefficient = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  double ContinuousMass() const;
  double TotalMass() const;
  double AtomMass(SwitchPolicy::Kind kind) const;
};

inline constexpr double kNormalizationTolerance = 1e-12;

enum class Algorithm { kBed, kLambdaBed, kRed, kLambdaRed, kNaiveLambdaRed };

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the names printed by AlgorithmName. Throws DomainError otherwise.
Algorithm ParseAlgorithm(std::string_view name);
bool IsRandomized(Algorithm algorithm);
bool UsesPrediction(Algorithm algorithm);

// Grid serves slot t iff the policy is NegOne, an earlier slot switched, or
// S(t) >= s * p_m; the triggering slot itself is grid-served, so the premium
// paid locally stays strictly below s * p_m. Throws DomainError on non-binary
// demand.
RunRecord RunThreshold(const Trace& trace, const BillingParams& params,
                       SwitchPolicy policy);

// Break-even: s = 1.
SwitchPolicy BedPolicy();

// s = lambda when sigma_hat > 1, else 1 / lambda. lambda in (0, 1].
SwitchPolicy LambdaBedPolicy(double sigma_hat, double lambda);

// density e^s / (e - 1 + beta) on [0, 1] and mass beta / (e - 1 + beta) at
// Infinity. beta in (0, 1].
DistributionSpec RedDistribution(double beta);

// lambda in [0, 1], beta in (0, 1]. With A = (1 - lambda)(e - 1) + beta and
// Z = e - 1 + beta: for sigma_hat > 1, mass A(1 - lambda)/Z at NegOne,
// density lambda e^s / Z on [0, 1] and mass A lambda / Z at Infinity; else the
// same density and mass A / Z at Infinity.
DistributionSpec LambdaRedDistribution(double sigma_hat, double lambda,
                                       double beta);

// The direct rescaling of RedDistribution that trusts the prediction without
// hedging: density e^s / (e^lambda - 1 + beta) on [0, lambda] when
// sigma_hat > 1, density e^s / (e^{1/lambda} - 1 + beta) on [0, 1/lambda]
// otherwise, each with its remaining beta mass at Infinity. lambda in (0, 1).
DistributionSpec NaiveRedDistribution(double sigma_hat, double lambda,
                                      double beta);

// Inverse-CDF draw. Leading atoms (those below lo, i.e. NegOne) claim the
// start of [0, 1), then the density, then the remaining atoms.
// Throws ValidationError when the spec is not normalized.
SwitchPolicy Sample(const DistributionSpec& spec, double uniform);

// Uniform in [0, 1) from the first output of a 64-bit Mersenne twister seeded
// with `seed`.
double UniformFromSeed(std::uint64_t seed);

// Picks the policy for `algorithm` (sampling with UniformFromSeed(seed) for the
// randomized ones) and runs it. lambda and sigma_hat are ignored by BED/RED.
RunRecord RunAlgorithm(const Trace& trace, const BillingParams& params,
                       Algorithm algorithm, double lambda, double sigma_hat,
                       std::uint64_t seed);

// The policy RunAlgorithm would use.
SwitchPolicy SelectPolicy(const Trace& trace, const BillingParams& params,
                          Algorithm algorithm, double lambda, double sigma_hat,
                          std::uint64_t seed);

}  // namespace peakaware

#endif  // PEAKAWARE_ONLINE_H_
