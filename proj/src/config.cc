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

#include "peakaware/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>

#include "peakaware/error.h"

namespace peakaware {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view text) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = Trim(text.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

std::string Shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(std::string_view key, std::string_view text) {
  text = Trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(key) + ": expected a number, got '" +
                     std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view text) {
  text = Trim(text);
  Int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string(key) + ": expected an integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  text = Trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError(std::string(key) + ": expected true or false");
}

std::vector<double> ParseDoubles(std::string_view key, std::string_view text) {
  std::vector<double> values;
  for (std::string_view item : SplitList(text)) {
    values.push_back(ParseDouble(key, item));
  }
  return values;
}

template <typename T, typename Format>
std::string JoinList(const std::vector<T>& items, Format format) {
  std::string joined;
  for (const T& item : items) {
    if (!joined.empty()) joined += ',';
    joined += format(item);
  }
  return joined;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view key,
                                  std::string_view value)>;

const std::map<std::string, Setter>& Setters() {
  static const auto* setters = new std::map<std::string, Setter>{
      {"price_csv",
       [](auto& c, auto, auto v) { c.price_csv = std::string(Trim(v)); }},
      {"demand_csv",
       [](auto& c, auto, auto v) { c.demand_csv = std::string(Trim(v)); }},
      {"round_demand",
       [](auto& c, auto k, auto v) { c.round_demand = ParseBool(k, v); }},
      {"synth_days",
       [](auto& c, auto k, auto v) { c.synth_days = ParseInt<int>(k, v); }},
      {"synth_peak_level",
       [](auto& c, auto k, auto v) { c.synth.peak_level = ParseDouble(k, v); }},
      {"synth_base_level",
       [](auto& c, auto k, auto v) { c.synth.base_level = ParseDouble(k, v); }},
      {"synth_noise",
       [](auto& c, auto k, auto v) { c.synth.noise = ParseDouble(k, v); }},
      {"synth_price_low",
       [](auto& c, auto k, auto v) { c.synth.price_low = ParseDouble(k, v); }},
      {"synth_price_high",
       [](auto& c, auto k, auto v) { c.synth.price_high = ParseDouble(k, v); }},
      {"synth_price_noise",
       [](auto& c, auto k, auto v) { c.synth.price_noise = ParseDouble(k, v); }},
      {"generator_multiplier",
       [](auto& c, auto k, auto v) {
         c.generator_multiplier = ParseDouble(k, v);
       }},
      {"peak_multiplier",
       [](auto& c, auto k, auto v) { c.peak_multiplier = ParseDouble(k, v); }},
      {"capacity_ratio",
       [](auto& c, auto k, auto v) { c.capacity_ratio = ParseDouble(k, v); }},
      {"ramp_ratio",
       [](auto& c, auto k, auto v) {
         if (Trim(v).empty() || Trim(v) == "none") {
           c.ramp_ratio.reset();
         } else {
           c.ramp_ratio = ParseDouble(k, v);
         }
       }},
      {"algorithms",
       [](auto& c, auto k, auto v) {
         c.algorithms.clear();
         for (std::string_view name : SplitList(v)) {
           try {
             c.algorithms.push_back(ParseAlgorithm(name));
           } catch (const DomainError& e) {
             throw ParseError(std::string(k) + ": " + e.what());
           }
         }
       }},
      {"lambdas",
       [](auto& c, auto k, auto v) { c.lambdas = ParseDoubles(k, v); }},
      {"predictors",
       [](auto& c, auto k, auto v) {
         c.predictors.clear();
         for (std::string_view name : SplitList(v)) {
           try {
             c.predictors.push_back(PredictorSpec::Parse(name));
           } catch (const Error& e) {
             throw ParseError(std::string(k) + ": " + e.what());
           }
         }
       }},
      {"price_noise",
       [](auto& c, auto k, auto v) {
         if (Trim(v).empty()) {
           c.price_noise.reset();
         } else {
           c.price_noise = ParseDouble(k, v);
         }
       }},
      {"demand_noise",
       [](auto& c, auto k, auto v) {
         if (Trim(v).empty()) {
           c.demand_noise.reset();
         } else {
           c.demand_noise = ParseDouble(k, v);
         }
       }},
      {"trials", [](auto& c, auto k, auto v) { c.trials = ParseInt<int>(k, v); }},
      {"seed",
       [](auto& c, auto k, auto v) {
         if (Trim(v).empty()) {
           c.seed.reset();
         } else {
           c.seed = ParseInt<std::uint64_t>(k, v);
         }
       }},
      {"out_dir", [](auto& c, auto, auto v) { c.out_dir = std::string(Trim(v)); }},
      {"threads",
       [](auto& c, auto k, auto v) { c.threads = ParseInt<int>(k, v); }},
      {"sweep_axis",
       [](auto& c, auto k, auto v) {
         try {
           c.sweep_axis = ParseSweepAxis(Trim(v));
         } catch (const DomainError& e) {
           throw ParseError(std::string(k) + ": " + e.what());
         }
       }},
      {"sweep_values",
       [](auto& c, auto k, auto v) { c.sweep_values = ParseDoubles(k, v); }},
  };
  return *setters;
}

}  // namespace

PredictorSpec PredictorSpec::Parse(std::string_view text) {
  text = Trim(text);
  if (text == "none") return {PredictorKind::kNone, 0.0};
  if (text == "perfect") return {PredictorKind::kPerfect, 0.0};
  if (text == "gaussian") return {PredictorKind::kGaussian, 0.0};
  if (text == "adversarial") return {PredictorKind::kAdversarial, 0.0};
  constexpr std::string_view kScalarPrefix = "scalar:";
  if (text.substr(0, kScalarPrefix.size()) == kScalarPrefix) {
    return {PredictorKind::kScalar,
            ParseDouble("scalar predictor", text.substr(kScalarPrefix.size()))};
  }
  throw DomainError("unknown predictor '" + std::string(text) + "'");
}

std::string PredictorSpec::Name() const {
  switch (kind) {
    case PredictorKind::kNone:
      return "none";
    case PredictorKind::kPerfect:
      return "perfect";
    case PredictorKind::kGaussian:
      return "gaussian";
    case PredictorKind::kAdversarial:
      return "adversarial";
    case PredictorKind::kScalar:
      return "scalar:" + Shortest(scalar);
  }
  return "?";
}

SweepAxis ParseSweepAxis(std::string_view text) {
  for (SweepAxis axis : {SweepAxis::kNone, SweepAxis::kLambda, SweepAxis::kPeak,
                         SweepAxis::kRamp, SweepAxis::kCapacity}) {
    if (text == SweepAxisName(axis)) return axis;
  }
  throw DomainError("unknown sweep axis '" + std::string(text) + "'");
}

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone:
      return "none";
    case SweepAxis::kLambda:
      return "lambda";
    case SweepAxis::kPeak:
      return "peak";
    case SweepAxis::kRamp:
      return "ramp";
    case SweepAxis::kCapacity:
      return "capacity";
  }
  return "?";
}

std::vector<double> DefaultSweepValues(SweepAxis axis) {
  const std::vector<double> tenths = {0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
  switch (axis) {
    case SweepAxis::kLambda:
    case SweepAxis::kCapacity:
      return tenths;
    case SweepAxis::kPeak:
      return {25.0, 50.0, 100.0, 200.0, 400.0};
    case SweepAxis::kRamp:
      return {0.05, 0.1, 0.2, 0.5, 1.0};
    case SweepAxis::kNone:
      break;
  }
  return {};
}

bool ExperimentConfig::NeedsSeed() const {
  const bool randomized =
      std::any_of(algorithms.begin(), algorithms.end(), IsRandomized);
  const bool noisy = std::any_of(
      predictors.begin(), predictors.end(),
      [](const PredictorSpec& p) { return p.kind == PredictorKind::kGaussian; });
  const bool synthetic = price_csv.empty();
  return randomized || noisy || synthetic;
}

void ExperimentConfig::Validate() const {
  if (price_csv.empty() != demand_csv.empty()) {
    throw DomainError("price_csv and demand_csv must be given together");
  }
  if (synth_days < 1) throw DomainError("synth_days must be at least 1");
  if (!(generator_multiplier >= 1.0)) {
    throw DomainError("generator_multiplier must be at least 1");
  }
  if (!(peak_multiplier > 0.0)) {
    throw DomainError("peak_multiplier must be positive");
  }
  if (!(capacity_ratio > 0.0 && capacity_ratio <= 1.0)) {
    throw DomainError("capacity_ratio must lie in (0, 1]");
  }
  if (ramp_ratio && !(*ramp_ratio >= 0.0)) {
    throw DomainError("ramp_ratio must be non-negative");
  }
  if (algorithms.empty()) throw DomainError("no algorithms selected");
  const bool predicted =
      std::any_of(algorithms.begin(), algorithms.end(), UsesPrediction);
  if (predicted && lambdas.empty() && sweep_axis != SweepAxis::kLambda) {
    throw DomainError("no lambda values given");
  }
  if (predicted && predictors.empty()) {
    throw DomainError("no predictors given");
  }
  for (double lambda : lambdas) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
      throw DomainError("lambda values must lie in (0, 1]");
    }
  }
  if (std::find(algorithms.begin(), algorithms.end(),
                Algorithm::kNaiveLambdaRed) != algorithms.end()) {
    for (double lambda : lambdas) {
      if (lambda == 1.0) {
        throw DomainError("naiveLambdaRED needs lambda < 1");
      }
    }
  }
  for (const PredictorSpec& predictor : predictors) {
    if (predicted && predictor.kind == PredictorKind::kNone) {
      throw DomainError("prediction-based algorithms need a predictor");
    }
  }
  if ((price_noise && *price_noise < 0.0) ||
      (demand_noise && *demand_noise < 0.0)) {
    throw DomainError("noise levels must be non-negative");
  }
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (threads < 0) throw DomainError("threads must be non-negative");
  if (NeedsSeed() && !seed) {
    throw DomainError("a seed is required for randomized algorithms, "
                      "Gaussian predictions and synthetic traces");
  }
  if (sweep_axis == SweepAxis::kNone && !sweep_values.empty()) {
    throw DomainError("sweep_values given without sweep_axis");
  }
  for (double value : sweep_values) {
    switch (sweep_axis) {
      case SweepAxis::kLambda:
        if (!(value > 0.0 && value <= 1.0)) {
          throw DomainError("lambda sweep values must lie in (0, 1]");
        }
        break;
      case SweepAxis::kCapacity:
        if (!(value > 0.0 && value <= 1.0)) {
          throw DomainError("capacity sweep values must lie in (0, 1]");
        }
        break;
      case SweepAxis::kPeak:
        if (!(value > 0.0)) throw DomainError("peak sweep values must be > 0");
        break;
      case SweepAxis::kRamp:
        if (!(value >= 0.0)) throw DomainError("ramp sweep values must be >= 0");
        break;
      case SweepAxis::kNone:
        break;
    }
  }
}

const std::vector<std::string>& ConfigKeys() {
  static const auto* keys = [] {
    auto* result = new std::vector<std::string>;
    for (const auto& [key, setter] : Setters()) result->push_back(key);
    return result;
  }();
  return *keys;
}

ConfigMap ParseConfigText(std::istream& in, std::string_view source) {
  ConfigMap values;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    text = Trim(text.substr(0, text.find('#')));
    if (text.empty()) continue;
    const auto equals = text.find('=');
    const std::string where =
        std::string(source) + ":" + std::to_string(line) + ": ";
    if (equals == std::string_view::npos) {
      throw ParseError(where + "expected 'key = value'");
    }
    const std::string key(Trim(text.substr(0, equals)));
    if (!Setters().contains(key)) {
      throw ParseError(where + "unknown key '" + key + "'");
    }
    if (!values.emplace(key, std::string(Trim(text.substr(equals + 1))))
             .second) {
      throw ParseError(where + "key '" + key + "' given twice");
    }
  }
  return values;
}

ConfigMap ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return ParseConfigText(in, path);
}

ExperimentConfig ConfigFromMap(const ConfigMap& values) {
  ExperimentConfig config;
  for (const auto& [key, value] : values) {
    const auto it = Setters().find(key);
    if (it == Setters().end()) {
      throw ParseError("unknown configuration key '" + key + "'");
    }
    it->second(config, key, value);
  }
  config.Validate();
  return config;
}

ConfigMap ConfigToMap(const ExperimentConfig& c) {
  auto optional = [](const std::optional<double>& v) {
    return v ? Shortest(*v) : std::string();
  };
  ConfigMap values;
  values["price_csv"] = c.price_csv;
  values["demand_csv"] = c.demand_csv;
  values["round_demand"] = c.round_demand ? "true" : "false";
  values["synth_days"] = std::to_string(c.synth_days);
  values["synth_peak_level"] = Shortest(c.synth.peak_level);
  values["synth_base_level"] = Shortest(c.synth.base_level);
  values["synth_noise"] = Shortest(c.synth.noise);
  values["synth_price_low"] = Shortest(c.synth.price_low);
  values["synth_price_high"] = Shortest(c.synth.price_high);
  values["synth_price_noise"] = Shortest(c.synth.price_noise);
  values["generator_multiplier"] = Shortest(c.generator_multiplier);
  values["peak_multiplier"] = Shortest(c.peak_multiplier);
  values["capacity_ratio"] = Shortest(c.capacity_ratio);
  values["ramp_ratio"] = c.ramp_ratio ? Shortest(*c.ramp_ratio) : "none";
  values["algorithms"] = JoinList(
      c.algorithms, [](Algorithm a) { return std::string(AlgorithmName(a)); });
  values["lambdas"] = JoinList(c.lambdas, Shortest);
  values["predictors"] =
      JoinList(c.predictors, [](const PredictorSpec& p) { return p.Name(); });
  values["price_noise"] = optional(c.price_noise);
  values["demand_noise"] = optional(c.demand_noise);
  values["trials"] = std::to_string(c.trials);
  values["seed"] = c.seed ? std::to_string(*c.seed) : std::string();
  values["out_dir"] = c.out_dir;
  values["threads"] = std::to_string(c.threads);
  values["sweep_axis"] = std::string(SweepAxisName(c.sweep_axis));
  values["sweep_values"] = JoinList(c.sweep_values, Shortest);
  return values;
}

std::string KeyToFlag(std::string_view key) {
  std::string flag(key);
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

}  // namespace peakaware
