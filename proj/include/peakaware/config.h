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

// Experiment configuration: a flat `key = value` file whose keys the command
// line mirrors in kebab case (capacity_ratio <-> --capacity-ratio).

#ifndef PEAKAWARE_CONFIG_H_
#define PEAKAWARE_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peakaware/online.h"
#include "peakaware/synth.h"

namespace peakaware {

enum class PredictorKind { kNone, kPerfect, kGaussian, kAdversarial, kScalar };

struct PredictorSpec {
  PredictorKind kind = PredictorKind::kNone;
  double scalar = 0.0;  // sigma_hat for kScalar

  // "none", "perfect", "gaussian", "adversarial" or "scalar:<value>".
  static PredictorSpec Parse(std::string_view text);
  std::string Name() const;
};

enum class SweepAxis { kNone, kLambda, kPeak, kRamp, kCapacity };

SweepAxis ParseSweepAxis(std::string_view text);
std::string_view SweepAxisName(SweepAxis axis);
// Values swept when sweep_values is empty.
std::vector<double> DefaultSweepValues(SweepAxis axis);

struct ExperimentConfig {
  // Trace source: both CSV paths, or neither for a synthetic trace.
  std::string price_csv;
  std::string demand_csv;
  bool round_demand = true;  // layering needs whole units
  int synth_days = 30;
  SynthProfile synth;

  // p_g = generator_multiplier * max p, p_m = peak_multiplier * max p,
  // C = ceil(capacity_ratio * max d), R = ceil(ramp_ratio * C).
  double generator_multiplier = 1.0;
  double peak_multiplier = 100.0;
  double capacity_ratio = 0.6;
  std::optional<double> ramp_ratio;

  std::vector<Algorithm> algorithms = {Algorithm::kBed, Algorithm::kLambdaBed,
                                       Algorithm::kRed, Algorithm::kLambdaRed};
  std::vector<double> lambdas = {0.5};
  std::vector<PredictorSpec> predictors = {{PredictorKind::kGaussian, 0.0}};
  // Standard deviations of the Gaussian predictor; unset means half of the
  // maximum price / demand.
  std::optional<double> price_noise;
  std::optional<double> demand_noise;

  // Seeded runs averaged per randomized cell.
  int trials = 200;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  int threads = 0;  // 0: one per hardware thread

  SweepAxis sweep_axis = SweepAxis::kNone;
  std::vector<double> sweep_values;

  // Throws DomainError on out-of-range values or a missing seed.
  void Validate() const;
  bool NeedsSeed() const;
};

using ConfigMap = std::map<std::string, std::string>;

// Every key ConfigFromMap understands.
const std::vector<std::string>& ConfigKeys();

// Lines are `key = value`; '#' starts a comment. ParseError names the line.
ConfigMap ParseConfigText(std::istream& in, std::string_view source);
ConfigMap ReadConfigFile(const std::string& path);

// Applies `values` over the defaults and validates. Unknown keys and bad
// values throw ParseError naming the key.
ExperimentConfig ConfigFromMap(const ConfigMap& values);
// Round-trips through ConfigFromMap.
ConfigMap ConfigToMap(const ExperimentConfig& config);

// "capacity_ratio" <-> "capacity-ratio".
std::string KeyToFlag(std::string_view key);

}  // namespace peakaware

#endif  // PEAKAWARE_CONFIG_H_
