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

// Experiment orchestration: builds the instance(s) a config describes, runs
// every (algorithm, lambda, predictor) cell through layered execution, and
// reports costs against the exact offline optimum.

#ifndef PEAKAWARE_EXPERIMENT_H_
#define PEAKAWARE_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peakaware/config.h"
#include "peakaware/csv_io.h"
#include "peakaware/trace.h"

namespace peakaware {

struct BaseTrace {
  Trace trace;
  std::vector<Timestamp> timestamps;
  std::size_t dropped_price_rows = 0;
  std::size_t dropped_demand_rows = 0;
  std::size_t rounded_demand_slots = 0;  // slots changed by round_demand
};

// Reads the CSV pair or synthesizes a trace (seeded with config.seed).
BaseTrace LoadBaseTrace(const ExperimentConfig& config);

// p_g, p_m, C and R from the multipliers and ratios in `config`.
BillingParams DeriveParams(const Trace& trace, const ExperimentConfig& config);

struct ReportRow {
  SweepAxis sweep_axis = SweepAxis::kNone;
  double sweep_value = 0.0;
  Algorithm algorithm = Algorithm::kBed;
  std::optional<double> lambda;  // unset for BED and RED
  std::string predictor;         // "none" for BED and RED
  double sigma = 0.0;
  std::optional<double> sigma_hat;
  double beta = 0.0;
  Money total_cost = 0.0;  // mean over trials for randomized algorithms
  Money opt_cost = 0.0;
  double empirical_cr = 0.0;
  double cost_reduction = 0.0;
};

// Everything needed to audit one instance of the experiment.
struct InstanceSummary {
  double sweep_value = 0.0;
  std::size_t slots = 0;
  BillingParams params;
  double beta = 0.0;
  double sigma = 0.0;
  std::map<std::string, double> sigma_hat;  // by predictor name
  std::string oracle;                       // "general" or "ramp"
  std::optional<Money> opt_total;
  Money grid_only_total = 0.0;
  std::optional<std::string> error;
};

struct CellError {
  std::string cell;
  std::string message;
};

struct ExperimentReport {
  ExperimentConfig config;
  BaseTrace base;
  std::vector<InstanceSummary> instances;
  std::vector<ReportRow> rows;  // sorted by cell key
  std::vector<CellError> errors;
};

// Cells are independent and run on a pool of config.threads workers; the
// report does not depend on the thread count.
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Report CSV; sweeps get leading sweep_axis and sweep_value columns.
void WriteReportCsv(std::ostream& out, const ExperimentReport& report);
void WriteManifestJson(std::ostream& out, const ExperimentReport& report);
// Writes report.csv and manifest.json under config.out_dir, creating it.
void WriteReportFiles(const ExperimentReport& report);

}  // namespace peakaware

#endif  // PEAKAWARE_EXPERIMENT_H_
