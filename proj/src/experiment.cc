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

#include "peakaware/experiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <tuple>

#include "json.hpp"
#include "peakaware/analysis.h"
#include "peakaware/error.h"
#include "peakaware/layering.h"
#include "peakaware/offline_oracle.h"
#include "peakaware/parallel.h"
#include "peakaware/prediction.h"
#include "peakaware/synth.h"

namespace peakaware {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kPredictorStream = 0x7072656469637421ULL;

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Combine(std::uint64_t seed, std::uint64_t value) {
  return Mix(Mix(seed) ^ value);
}

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t HashString(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string Shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

struct InstanceData {
  InstanceSummary summary;
  std::optional<Trace> trace;
  // Per predictor name: layer sigma_hat vector.
  std::map<std::string, std::vector<double>> layer_sigma_hats;
};

struct Cell {
  std::size_t instance = 0;
  Algorithm algorithm = Algorithm::kBed;
  std::optional<double> lambda;
  PredictorSpec predictor;

  std::string Key(const ExperimentConfig& config, double sweep_value) const {
    std::string key;
    if (config.sweep_axis != SweepAxis::kNone) {
      key += std::string(SweepAxisName(config.sweep_axis)) + "=" +
             Shortest(sweep_value) + "/";
    }
    key += std::string(AlgorithmName(algorithm));
    if (lambda) key += "/lambda=" + Shortest(*lambda);
    key += "/" + predictor.Name();
    return key;
  }
};

ExperimentConfig ConfigForSweepValue(const ExperimentConfig& config,
                                     double value) {
  ExperimentConfig local = config;
  switch (config.sweep_axis) {
    case SweepAxis::kLambda:
      local.lambdas = {value};
      break;
    case SweepAxis::kPeak:
      local.peak_multiplier = value;
      break;
    case SweepAxis::kRamp:
      local.ramp_ratio = value;
      break;
    case SweepAxis::kCapacity:
      local.capacity_ratio = value;
      break;
    case SweepAxis::kNone:
      break;
  }
  return local;
}

void PrepareInstance(const ExperimentConfig& config, const Trace& trace,
                     double sweep_value, InstanceData* data) {
  InstanceSummary& summary = data->summary;
  summary.sweep_value = sweep_value;
  summary.slots = trace.size();
  try {
    const ExperimentConfig local = ConfigForSweepValue(config, sweep_value);
    summary.params = DeriveParams(trace, local);
    summary.beta = Beta(trace, summary.params);
    summary.sigma = Sigma(trace, summary.params);
    summary.grid_only_total = GridOnlyCost(trace, summary.params);
    data->trace = trace;

    const std::size_t depth = Decompose(trace).depth;
    for (const PredictorSpec& predictor : config.predictors) {
      const std::string name = predictor.Name();
      switch (predictor.kind) {
        case PredictorKind::kNone:
          continue;
        case PredictorKind::kPerfect:
          summary.sigma_hat[name] = summary.sigma;
          data->layer_sigma_hats[name] =
              PerfectLayerSigmaHats(trace, summary.params);
          break;
        case PredictorKind::kGaussian: {
          const GaussianNoise noise{config.price_noise, config.demand_noise};
          const Prediction prediction = GaussianPredictor(
              trace, summary.params, noise,
              Combine(config.seed.value_or(0), kPredictorStream));
          summary.sigma_hat[name] = prediction.sigma_hat;
          data->layer_sigma_hats[name] =
              PredictedLayerSigmaHats(prediction, summary.params, depth);
          break;
        }
        case PredictorKind::kAdversarial:
          summary.sigma_hat[name] =
              AdversarialPredictor(trace, summary.params).sigma_hat;
          data->layer_sigma_hats[name] =
              AdversarialLayerSigmaHats(trace, summary.params);
          break;
        case PredictorKind::kScalar:
          summary.sigma_hat[name] = predictor.scalar;
          data->layer_sigma_hats[name] =
              std::vector<double>(depth, predictor.scalar);
          break;
      }
    }

    if (summary.params.ramp) {
      summary.oracle = "ramp";
      summary.opt_total = OptimalWithRamp(trace, summary.params).total;
    } else {
      summary.oracle = "general";
      summary.opt_total = OptimalGeneral(trace, summary.params).total;
    }
  } catch (const std::exception& e) {
    summary.error = e.what();
  }
}

ReportRow RunCell(const ExperimentConfig& config, const Cell& cell,
                  const InstanceData& data, std::uint64_t cell_seed) {
  const InstanceSummary& summary = data.summary;
  if (summary.error) throw Error("instance failed: " + *summary.error);
  const Trace& trace = *data.trace;
  const BillingParams& params = summary.params;

  std::vector<double> sigma_hats;
  if (UsesPrediction(cell.algorithm)) {
    sigma_hats = data.layer_sigma_hats.at(cell.predictor.Name());
  }
  const int trials = IsRandomized(cell.algorithm) ? config.trials : 1;
  const double lambda = cell.lambda.value_or(1.0);
  double total = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Schedule schedule =
        RunLayered(trace, params, cell.algorithm, lambda, sigma_hats,
                   Combine(cell_seed, static_cast<std::uint64_t>(trial)));
    if (params.ramp) schedule = ProjectRamp(schedule, trace, params);
    total += CostOf(schedule, trace, params).total;
  }
  total /= trials;

  ReportRow row;
  row.sweep_axis = config.sweep_axis;
  row.sweep_value = summary.sweep_value;
  row.algorithm = cell.algorithm;
  row.lambda = cell.lambda;
  row.predictor = cell.predictor.Name();
  row.sigma = summary.sigma;
  if (UsesPrediction(cell.algorithm)) {
    row.sigma_hat = summary.sigma_hat.at(row.predictor);
  }
  row.beta = summary.beta;
  row.total_cost = total;
  row.opt_cost = *summary.opt_total;
  row.empirical_cr = EmpiricalCr(total, row.opt_cost);
  row.cost_reduction = CostReduction(total, trace, params);
  return row;
}

auto SortKey(const ReportRow& row) {
  return std::make_tuple(row.sweep_value, static_cast<int>(row.algorithm),
                         row.predictor, row.lambda.has_value(),
                         row.lambda.value_or(0.0));
}

std::string Optional(const std::optional<double>& value) {
  return value ? Shortest(*value) : std::string();
}

Json ParamsJson(const BillingParams& params) {
  Json json;
  json["generator_cost"] = params.generator_cost;
  json["peak_price"] = params.peak_price;
  json["capacity"] = params.capacity;
  json["ramp"] = params.ramp ? Json(*params.ramp) : Json(nullptr);
  return json;
}

}  // namespace

BaseTrace LoadBaseTrace(const ExperimentConfig& config) {
  BaseTrace base{Trace({1.0}, {0.0}), {}, 0, 0, 0};
  if (!config.price_csv.empty()) {
    AlignedTrace aligned = ParseTraceCsv(config.price_csv, config.demand_csv);
    base.trace = std::move(aligned.trace);
    base.timestamps = std::move(aligned.timestamps);
    base.dropped_price_rows = aligned.dropped_price_rows;
    base.dropped_demand_rows = aligned.dropped_demand_rows;
  } else {
    SynthTrace synth =
        MakeSynthTrace(config.synth_days, config.seed.value_or(0), config.synth);
    base.trace = std::move(synth.trace);
    base.timestamps = std::move(synth.timestamps);
  }
  if (config.round_demand && !base.trace.is_integral()) {
    std::vector<double> demands(base.trace.demands().begin(),
                                base.trace.demands().end());
    for (double& d : demands) {
      const double rounded = std::round(d);
      if (rounded != d) ++base.rounded_demand_slots;
      d = rounded;
    }
    base.trace = base.trace.with_demands(std::move(demands));
  }
  return base;
}

BillingParams DeriveParams(const Trace& trace, const ExperimentConfig& config) {
  BillingParams params;
  params.generator_cost = config.generator_multiplier * trace.max_price();
  params.peak_price = config.peak_multiplier * trace.max_price();
  // At least one unit, so that a trace without demand still has valid params.
  params.capacity =
      std::max(1.0, std::ceil(config.capacity_ratio * trace.max_demand()));
  if (config.ramp_ratio) {
    params.ramp = std::ceil(*config.ramp_ratio * params.capacity);
  }
  params.Validate();
  return params;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  ExperimentReport report{config, LoadBaseTrace(config), {}, {}, {}};

  std::vector<double> sweep_values = config.sweep_values;
  if (config.sweep_axis == SweepAxis::kNone) {
    sweep_values = {0.0};
  } else if (sweep_values.empty()) {
    sweep_values = DefaultSweepValues(config.sweep_axis);
  }

  std::vector<InstanceData> instances(sweep_values.size());
  ParallelFor(instances.size(), config.threads, [&](std::size_t i) {
    PrepareInstance(config, report.base.trace, sweep_values[i], &instances[i]);
  });

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const ExperimentConfig local = ConfigForSweepValue(config, sweep_values[i]);
    for (Algorithm algorithm : config.algorithms) {
      if (!UsesPrediction(algorithm)) {
        cells.push_back({i, algorithm, std::nullopt, PredictorSpec{}});
        continue;
      }
      for (double lambda : local.lambdas) {
        for (const PredictorSpec& predictor : config.predictors) {
          cells.push_back({i, algorithm, lambda, predictor});
        }
      }
    }
  }

  std::vector<std::optional<ReportRow>> rows(cells.size());
  std::vector<std::optional<std::string>> failures(cells.size());
  ParallelFor(cells.size(), config.threads, [&](std::size_t c) {
    const Cell& cell = cells[c];
    const std::string key = cell.Key(config, sweep_values[cell.instance]);
    try {
      rows[c] = RunCell(config, cell, instances[cell.instance],
                        Combine(config.seed.value_or(0), HashString(key)));
    } catch (const std::exception& e) {
      failures[c] = e.what();
    }
  });

  for (InstanceData& data : instances) {
    report.instances.push_back(std::move(data.summary));
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (rows[c]) report.rows.push_back(std::move(*rows[c]));
    if (failures[c]) {
      report.errors.push_back(
          {cells[c].Key(config, sweep_values[cells[c].instance]),
           *failures[c]});
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return SortKey(a) < SortKey(b);
                   });
  std::sort(report.errors.begin(), report.errors.end(),
            [](const CellError& a, const CellError& b) { return a.cell < b.cell; });
  return report;
}

void WriteReportCsv(std::ostream& out, const ExperimentReport& report) {
  const bool sweep = report.config.sweep_axis != SweepAxis::kNone;
  if (sweep) out << "sweep_axis,sweep_value,";
  out << "algorithm,lambda,predictor,sigma,sigma_hat,beta,total_cost,opt_cost,"
         "empirical_cr,cost_reduction\n";
  for (const ReportRow& row : report.rows) {
    if (sweep) {
      out << SweepAxisName(row.sweep_axis) << ',' << Shortest(row.sweep_value)
          << ',';
    }
    out << AlgorithmName(row.algorithm) << ',' << Optional(row.lambda) << ','
        << row.predictor << ',' << Shortest(row.sigma) << ','
        << Optional(row.sigma_hat) << ',' << Shortest(row.beta) << ','
        << Shortest(row.total_cost) << ',' << Shortest(row.opt_cost) << ','
        << Shortest(row.empirical_cr) << ',' << Shortest(row.cost_reduction)
        << '\n';
  }
}

void WriteManifestJson(std::ostream& out, const ExperimentReport& report) {
  Json manifest;
  Json config = Json::object();
  for (const auto& [key, value] : ConfigToMap(report.config)) {
    config[key] = value;
  }
  manifest["config"] = config;
  manifest["seed"] =
      report.config.seed ? Json(*report.config.seed) : Json(nullptr);

  Json trace;
  trace["source"] = report.config.price_csv.empty() ? "synthetic" : "csv";
  trace["slots"] = report.base.trace.size();
  if (!report.base.timestamps.empty()) {
    trace["first_timestamp"] = FormatTimestamp(report.base.timestamps.front());
    trace["last_timestamp"] = FormatTimestamp(report.base.timestamps.back());
  }
  trace["dropped_price_rows"] = report.base.dropped_price_rows;
  trace["dropped_demand_rows"] = report.base.dropped_demand_rows;
  trace["rounded_demand_slots"] = report.base.rounded_demand_slots;
  trace["max_price"] = report.base.trace.max_price();
  trace["max_demand"] = report.base.trace.max_demand();
  manifest["trace"] = trace;

  Json instances = Json::array();
  for (const InstanceSummary& s : report.instances) {
    Json instance;
    if (report.config.sweep_axis != SweepAxis::kNone) {
      instance["sweep_axis"] = SweepAxisName(report.config.sweep_axis);
      instance["sweep_value"] = s.sweep_value;
    }
    instance["slots"] = s.slots;
    instance["params"] = ParamsJson(s.params);
    instance["beta"] = s.beta;
    instance["sigma"] = s.sigma;
    Json sigma_hat = Json::object();
    for (const auto& [name, value] : s.sigma_hat) sigma_hat[name] = value;
    instance["sigma_hat"] = sigma_hat;
    instance["oracle"] = s.oracle;
    instance["opt_total"] = s.opt_total ? Json(*s.opt_total) : Json(nullptr);
    instance["grid_only_total"] = s.grid_only_total;
    if (s.error) instance["error"] = *s.error;
    instances.push_back(instance);
  }
  manifest["instances"] = instances;
  manifest["rows"] = report.rows.size();

  Json errors = Json::array();
  for (const CellError& error : report.errors) {
    errors.push_back({{"cell", error.cell}, {"message", error.message}});
  }
  manifest["errors"] = errors;
  out << manifest.dump(2) << '\n';
}

void WriteReportFiles(const ExperimentReport& report) {
  const std::filesystem::path dir(report.config.out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "report.csv");
  WriteReportCsv(csv, report);
  std::ofstream manifest(dir / "manifest.json");
  WriteManifestJson(manifest, report);
  if (!csv || !manifest) {
    throw Error("failed to write report files under " + dir.string());
  }
}

}  // namespace peakaware
