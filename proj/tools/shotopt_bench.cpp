// Copyright 2026 The shotopt authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Benchmark harness CLI: runs seeded optimizer comparisons and reports
// cumulative distributions, summary tables and plots from the results.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shotopt/bench/plot.hpp"
#include "shotopt/bench/report.hpp"
#include "shotopt/bench/runner.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  int seeds = 0;
  int parallel = 1;
  std::string noise;  // "on" | "off" | "" (config value)
  bool full_scale = false;
};

shotopt::bench::ExperimentConfig load_config(const CommonArgs& args) {
  auto config = shotopt::bench::ExperimentConfig::from_file(args.config_path);
  if (args.seeds > 0) {
    config.seeds.clear();
    config.seed_count = args.seeds;
  }
  if (args.noise == "on") config.noise.enabled = true;
  else if (args.noise == "off") config.noise.enabled = false;
  if (args.full_scale) {
    config.full_scale = true;
    if (config.seeds.empty()) config.seed_count = std::max(config.seed_count, 100);
    if (config.budgets.back() < 10000000) config.budgets.push_back(10000000);
  }
  if (!args.out_dir.empty()) config.out_dir = args.out_dir;
  config.validate();
  return config;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool run_flags) {
  cmd->add_option("--config", args.config_path, "Experiment config (JSON)")
      ->required();
  cmd->add_option("--out", args.out_dir, "Output directory");
  cmd->add_option("--noise", args.noise, "Override noise: on|off")
      ->check(CLI::IsMember({"on", "off"}));
  if (run_flags) {
    cmd->add_option("--seeds", args.seeds, "Override the number of seeds");
    cmd->add_option("--parallel", args.parallel, "Worker threads (1 = serial)");
    cmd->add_flag("--full-scale", args.full_scale,
                  "100 seeds and a 10^7 budget");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shot-frugal optimizer benchmark harness"};
  app.require_subcommand(1);

  CommonArgs run_args, cdf_args, summary_args, plot_args;
  long long cdf_budget = 0;

  CLI::App* run_cmd = app.add_subcommand("run", "Execute all runs, write traces and checkpoints");
  add_common(run_cmd, run_args, true);

  CLI::App* cdf_cmd = app.add_subcommand("cdf", "Cumulative distributions from checkpoints.csv");
  add_common(cdf_cmd, cdf_args, false);
  cdf_cmd->add_option("--budget", cdf_budget, "Only this checkpoint budget");

  CLI::App* summary_cmd = app.add_subcommand("summary", "Mean-cost table from checkpoints.csv");
  add_common(summary_cmd, summary_args, false);

  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG CDF panels from checkpoints.csv");
  add_common(plot_cmd, plot_args, false);

  CLI11_PARSE(app, argc, argv);

  namespace fs = std::filesystem;
  using namespace shotopt::bench;
  try {
    if (run_cmd->parsed()) {
      const auto config = load_config(run_args);
      run_experiment(config, config.out_dir, run_args.parallel);
      std::cout << "wrote " << (fs::path(config.out_dir) / "checkpoints.csv").string()
                << "\n";
    } else if (cdf_cmd->parsed()) {
      const auto config = load_config(cdf_args);
      const auto rows =
          load_checkpoints((fs::path(config.out_dir) / "checkpoints.csv").string());
      const std::string noise_tag = config.noise.enabled ? "noisy" : "noiseless";
      for (long long budget : config.budgets) {
        if (cdf_budget > 0 && budget != cdf_budget) continue;
        const auto curves = cumulative_distribution(rows, budget, config);
        const std::string path =
            (fs::path(config.out_dir) /
             ("cdf_" + config.task + "_" + noise_tag + "_" + std::to_string(budget) + ".csv"))
                .string();
        write_cdf_csv(curves, path);
        std::cout << "wrote " << path << "\n";
      }
    } else if (summary_cmd->parsed()) {
      const auto config = load_config(summary_args);
      const auto rows =
          load_checkpoints((fs::path(config.out_dir) / "checkpoints.csv").string());
      const SummaryTable table = summary_table(rows, config);
      const std::string path = (fs::path(config.out_dir) / "summary.csv").string();
      write_summary_csv(table, path);
      std::cout << render_summary(table);
      std::cout << "wrote " << path << "\n";
    } else if (plot_cmd->parsed()) {
      const auto config = load_config(plot_args);
      const auto rows =
          load_checkpoints((fs::path(config.out_dir) / "checkpoints.csv").string());
      emit_plots(rows, config, config.out_dir);
      std::cout << "wrote plots under " << (fs::path(config.out_dir) / "plots").string()
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
