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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "peakaware/csv_io.h"
#include "peakaware/error.h"
#include "peakaware/synth.h"

namespace peakaware {
namespace {

ExperimentConfig SmallConfig() {
  ExperimentConfig config;
  config.synth_days = 3;
  config.seed = 11;
  config.trials = 20;
  config.threads = 1;
  config.algorithms = {Algorithm::kBed, Algorithm::kLambdaBed,
                       Algorithm::kRed, Algorithm::kLambdaRed};
  config.lambdas = {0.5, 1.0};
  config.predictors = {{PredictorKind::kPerfect, 0.0},
                       {PredictorKind::kGaussian, 0.0}};
  return config;
}

std::string Csv(const ExperimentReport& report) {
  std::ostringstream out;
  WriteReportCsv(out, report);
  return out.str();
}

std::string Manifest(const ExperimentReport& report) {
  std::ostringstream out;
  WriteManifestJson(out, report);
  return out.str();
}

const ReportRow* FindRow(const ExperimentReport& report, Algorithm algorithm,
                         std::optional<double> lambda,
                         const std::string& predictor) {
  for (const ReportRow& row : report.rows) {
    if (row.algorithm == algorithm && row.lambda == lambda &&
        row.predictor == predictor) {
      return &row;
    }
  }
  return nullptr;
}

TEST(DeriveParamsTest, DefaultsFollowMaxima) {
  const Trace trace({10.0, 40.0}, {3.0, 10.0});
  ExperimentConfig config;
  config.seed = 1;
  BillingParams params = DeriveParams(trace, config);
  EXPECT_EQ(params.generator_cost, 40.0);
  EXPECT_EQ(params.peak_price, 4000.0);
  EXPECT_EQ(params.capacity, 6.0);
  EXPECT_FALSE(params.ramp.has_value());
  config.ramp_ratio = 0.5;
  config.capacity_ratio = 0.25;
  params = DeriveParams(trace, config);
  EXPECT_EQ(params.capacity, 3.0);
  EXPECT_EQ(params.ramp, std::optional<double>(2.0));
}

TEST(RunExperimentTest, RowsPerCellAndReductions) {
  const ExperimentReport report = RunExperiment(SmallConfig());
  EXPECT_TRUE(report.errors.empty());
  // BED and RED once each; the prediction-based ones per lambda x predictor.
  EXPECT_EQ(report.rows.size(), 2u + 2u * 2u * 2u);
  const ReportRow* bed = FindRow(report, Algorithm::kBed, std::nullopt, "none");
  ASSERT_NE(bed, nullptr);
  for (const char* predictor : {"perfect", "gaussian"}) {
    const ReportRow* trusted =
        FindRow(report, Algorithm::kLambdaBed, 1.0, predictor);
    ASSERT_NE(trusted, nullptr);
    EXPECT_EQ(trusted->total_cost, bed->total_cost);
  }
  for (const ReportRow& row : report.rows) {
    EXPECT_GE(row.empirical_cr, 1.0 - 1e-9) << AlgorithmName(row.algorithm);
    EXPECT_EQ(row.opt_cost, bed->opt_cost);
    EXPECT_NEAR(row.empirical_cr, row.total_cost / row.opt_cost, 1e-12);
  }
  ASSERT_EQ(report.instances.size(), 1u);
  EXPECT_EQ(report.instances[0].oracle, "general");
  EXPECT_EQ(report.instances[0].sigma_hat.count("perfect"), 1u);
}

TEST(RunExperimentTest, ByteIdenticalAcrossRunsAndThreadCounts) {
  ExperimentConfig config = SmallConfig();
  const ExperimentReport first = RunExperiment(config);
  const ExperimentReport second = RunExperiment(config);
  EXPECT_EQ(Csv(first), Csv(second));
  EXPECT_EQ(Manifest(first), Manifest(second));
  config.threads = 4;
  EXPECT_EQ(Csv(RunExperiment(config)), Csv(first));
}

TEST(RunExperimentTest, SeedChangesRandomizedCells) {
  ExperimentConfig config = SmallConfig();
  const std::string first = Csv(RunExperiment(config));
  config.seed = 12;
  EXPECT_NE(Csv(RunExperiment(config)), first);
}

TEST(RunExperimentTest, SweepAddsLeadingColumns) {
  ExperimentConfig config = SmallConfig();
  config.algorithms = {Algorithm::kBed, Algorithm::kLambdaBed};
  config.predictors = {{PredictorKind::kPerfect, 0.0}};
  config.sweep_axis = SweepAxis::kLambda;
  config.sweep_values = {0.2, 0.6, 1.0};
  const ExperimentReport report = RunExperiment(config);
  EXPECT_EQ(report.rows.size(), 6u);
  const std::string csv = Csv(report);
  EXPECT_EQ(csv.rfind("sweep_axis,sweep_value,algorithm,lambda,", 0), 0u);
  EXPECT_NE(csv.find("\nlambda,0.6,lambdaBED,0.6,perfect,"), std::string::npos)
      << csv;
}

TEST(RunExperimentTest, RampSweepUsesTheRampOracle) {
  ExperimentConfig config = SmallConfig();
  config.synth_days = 1;
  config.algorithms = {Algorithm::kBed};
  config.sweep_axis = SweepAxis::kRamp;
  config.sweep_values = {0.2};
  const ExperimentReport report = RunExperiment(config);
  ASSERT_EQ(report.instances.size(), 1u);
  EXPECT_EQ(report.instances[0].oracle, "ramp");
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_GE(report.rows[0].empirical_cr, 1.0 - 1e-9);
}

TEST(RunExperimentTest, ManifestRecordsInstanceRatios) {
  const ExperimentReport report = RunExperiment(SmallConfig());
  const nlohmann::json manifest = nlohmann::json::parse(Manifest(report));
  EXPECT_EQ(manifest["seed"], 11);
  EXPECT_EQ(manifest["trace"]["slots"], 72);
  const auto& instance = manifest["instances"][0];
  EXPECT_TRUE(instance.contains("beta"));
  EXPECT_TRUE(instance.contains("sigma"));
  EXPECT_TRUE(instance["sigma_hat"].contains("gaussian"));
  EXPECT_EQ(manifest["config"]["lambdas"], "0.5,1");
}

TEST(RunExperimentTest, ReadsCsvTraces) {
  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) / "peakaware_csv_trace";
  std::filesystem::create_directories(dir);
  const SynthTrace synth = MakeSynthTrace(2, 4);
  {
    std::ofstream prices(dir / "prices.csv");
    WriteSeries(prices, synth.timestamps, synth.trace.prices());
    std::ofstream demand(dir / "demand.csv");
    // Drop the first hour from the demand file.
    std::vector<Timestamp> stamps(synth.timestamps.begin() + 1,
                                  synth.timestamps.end());
    WriteSeries(demand, stamps, synth.trace.demands().subspan(1));
  }
  ExperimentConfig config;
  config.price_csv = (dir / "prices.csv").string();
  config.demand_csv = (dir / "demand.csv").string();
  config.algorithms = {Algorithm::kBed, Algorithm::kLambdaBed};
  config.predictors = {{PredictorKind::kPerfect, 0.0}};
  config.threads = 1;
  config.Validate();
  const ExperimentReport report = RunExperiment(config);
  EXPECT_EQ(report.base.trace.size(), 47u);
  EXPECT_EQ(report.base.dropped_price_rows, 1u);
  EXPECT_EQ(report.rows.size(), 2u);
}

TEST(RunExperimentTest, MissingFileIsAnError) {
  ExperimentConfig config;
  config.price_csv = "/nonexistent/prices.csv";
  config.demand_csv = "/nonexistent/demand.csv";
  config.seed = 1;
  config.algorithms = {Algorithm::kBed};
  EXPECT_THROW(RunExperiment(config), ParseError);
}

}  // namespace
}  // namespace peakaware
