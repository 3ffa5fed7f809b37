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

#ifndef SHOTOPT_BENCH_RUNNER_HPP
#define SHOTOPT_BENCH_RUNNER_HPP

#include "shotopt/bench/config.hpp"
#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt::bench {

/// One (optimizer, seed, budget) snapshot: the run state at the first
/// iteration whose running total reached the budget.
struct CheckpointRow {
  long long run_id = 0;
  std::uint64_t seed = 0;
  std::string optimizer;
  std::string task;
  bool noise = false;
  long long budget = 0;
  long long s_tot = 0;
  double exact_cost = 0.0;
  double est_cost = 0.0;
};

struct RunOutput {
  long long run_id = 0;
  std::uint64_t seed = 0;
  std::string optimizer;
  RunTrace trace;
};

/// Executes every (optimizer, seed) pair to the maximum configured
/// budget. workers = 1 runs the serial reference loop; workers > 1 fans
/// runs out over OpenMP threads. Results are identical either way: each
/// run owns a generator derived from (seed, optimizer label), and outputs
/// are collected by run id.
std::vector<RunOutput> run_all(const ExperimentConfig& config, int workers);

std::vector<CheckpointRow> extract_checkpoints(const ExperimentConfig& config,
                                               const std::vector<RunOutput>& runs);

/// Writes traces/<label>_seed<k>.csv and checkpoints.csv under out_dir.
/// Rows are ordered by (optimizer, seed, budget); bytes are a pure
/// function of the config.
void write_outputs(const ExperimentConfig& config,
                   const std::vector<RunOutput>& runs,
                   const std::string& out_dir);

/// run_all + extract + write, the `run` subcommand.
void run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                    int workers);

/// 17-significant-digit formatting used for every floating-point field in
/// the CSV outputs; NaN renders as "nan".
std::string format_double(double value);

std::vector<CheckpointRow> load_checkpoints(const std::string& csv_path);

}  // namespace shotopt::bench

#endif  // SHOTOPT_BENCH_RUNNER_HPP
