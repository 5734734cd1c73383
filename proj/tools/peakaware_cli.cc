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

// Command-line front end: run / compare / sweep experiments, synthesize
// traces, and verify the ratio formulas.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "peakaware/config.h"
#include "peakaware/csv_io.h"
#include "peakaware/error.h"
#include "peakaware/experiment.h"
#include "peakaware/synth.h"
#include "peakaware/verify.h"

namespace {

using peakaware::ConfigMap;

// Flags given on the command line, keyed by config key.
struct FlagValues {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void AddConfigFlags(CLI::App* command, FlagValues* flags) {
  command->add_option("--config", flags->config_file,
                      "key = value file; flags override its entries")
      ->check(CLI::ExistingFile);
  for (const std::string& key : peakaware::ConfigKeys()) {
    if (key == "sweep_axis") continue;  // positional on `sweep`
    command->add_option("--" + peakaware::KeyToFlag(key), flags->values[key],
                        "config key '" + key + "'");
  }
}

peakaware::ExperimentConfig ResolveConfig(const CLI::App& command,
                                          const FlagValues& flags,
                                          const ConfigMap& overrides = {}) {
  ConfigMap merged;
  if (!flags.config_file.empty()) {
    merged = peakaware::ReadConfigFile(flags.config_file);
  }
  for (const auto& [key, value] : flags.values) {
    if (command.count("--" + peakaware::KeyToFlag(key)) > 0) {
      merged[key] = value;
    }
  }
  for (const auto& [key, value] : overrides) merged[key] = value;
  return peakaware::ConfigFromMap(merged);
}

int RunAndWrite(const peakaware::ExperimentConfig& config) {
  const peakaware::ExperimentReport report = peakaware::RunExperiment(config);
  peakaware::WriteReportFiles(report);
  peakaware::WriteReportCsv(std::cout, report);
  for (const peakaware::CellError& error : report.errors) {
    std::cerr << "cell " << error.cell << " failed: " << error.message << "\n";
  }
  std::cerr << report.rows.size() << " rows written to "
            << (std::filesystem::path(config.out_dir) / "report.csv").string()
            << "\n";
  return report.rows.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peak-aware energy scheduling experiments"};
  app.require_subcommand(1);

  FlagValues run_flags;
  std::string algorithm;
  std::string lambda;
  std::string predictor;
  CLI::App* run = app.add_subcommand("run", "one algorithm on one trace");
  AddConfigFlags(run, &run_flags);
  run->add_option("--algorithm", algorithm,
                  "BED, lambdaBED, RED, lambdaRED or naiveLambdaRED")
      ->required();
  run->add_option("--lambda", lambda, "trust parameter in (0, 1]");
  run->add_option("--predictor", predictor,
                  "perfect, gaussian, adversarial or scalar:<sigma_hat>");

  FlagValues compare_flags;
  CLI::App* compare =
      app.add_subcommand("compare", "table of the configured algorithms");
  AddConfigFlags(compare, &compare_flags);

  FlagValues sweep_flags;
  std::string axis;
  CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter");
  sweep->add_option("axis", axis, "lambda, peak, ramp or capacity")
      ->required()
      ->check(CLI::IsMember({"lambda", "peak", "ramp", "capacity"}));
  AddConfigFlags(sweep, &sweep_flags);

  FlagValues synth_flags;
  int days = 30;
  CLI::App* synth = app.add_subcommand("synth", "write a synthetic trace");
  AddConfigFlags(synth, &synth_flags);
  synth->add_option("--days", days, "length in days")->check(CLI::PositiveNumber);

  peakaware::VerifyGrids grids;
  std::string verify_out;
  CLI::App* verify =
      app.add_subcommand("verify", "check the ratio formulas numerically");
  verify->add_option("--lambda-points", grids.lambda_points)
      ->check(CLI::Range(5, 1000));
  verify->add_option("--beta-points", grids.beta_points)
      ->check(CLI::Range(5, 1000));
  verify->add_option("--sigma-points", grids.sigma_points)
      ->check(CLI::Range(5, 100000));
  verify->add_option("--threads", grids.threads)->check(CLI::NonNegativeNumber);
  verify->add_option("--out-dir", verify_out, "also write verify.csv here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ConfigMap overrides = {{"algorithms", algorithm}};
      if (!lambda.empty()) overrides["lambdas"] = lambda;
      if (!predictor.empty()) overrides["predictors"] = predictor;
      return RunAndWrite(ResolveConfig(*run, run_flags, overrides));
    }
    if (compare->parsed()) {
      return RunAndWrite(ResolveConfig(*compare, compare_flags));
    }
    if (sweep->parsed()) {
      return RunAndWrite(
          ResolveConfig(*sweep, sweep_flags, {{"sweep_axis", axis}}));
    }
    if (synth->parsed()) {
      const peakaware::ExperimentConfig config =
          ResolveConfig(*synth, synth_flags, {{"synth_days", std::to_string(days)}});
      const peakaware::SynthTrace trace =
          peakaware::MakeSynthTrace(days, config.seed.value_or(0), config.synth);
      const std::filesystem::path dir(config.out_dir);
      std::filesystem::create_directories(dir);
      std::ofstream prices(dir / "prices.csv");
      peakaware::WriteSeries(prices, trace.timestamps, trace.trace.prices());
      std::ofstream demand(dir / "demand.csv");
      peakaware::WriteSeries(demand, trace.timestamps, trace.trace.demands());
      if (!prices || !demand) {
        std::cerr << "failed to write under " << dir.string() << "\n";
        return 1;
      }
      std::cerr << trace.trace.size() << " slots written to "
                << (dir / "prices.csv").string() << " and "
                << (dir / "demand.csv").string() << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const peakaware::VerifyReport report = peakaware::RunVerification(grids);
      peakaware::PrintVerifyReport(std::cout, report);
      if (!verify_out.empty()) {
        std::filesystem::create_directories(verify_out);
        std::ofstream csv(std::filesystem::path(verify_out) / "verify.csv");
        peakaware::WriteVerifyCsv(csv, report);
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const peakaware::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
