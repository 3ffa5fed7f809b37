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

// Compares the serial reference runner against the OpenMP one on a fixed
// workload and checks that both produce identical checkpoints.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shotopt/bench/runner.hpp"

int main(int argc, char** argv) {
  using namespace shotopt::bench;
  using clock = std::chrono::steady_clock;

  int workers = 0;
  long long budget = 100000;
  if (argc > 1) workers = std::atoi(argv[1]);
  if (argc > 2) budget = std::atoll(argv[2]);
#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  if (workers <= 0) workers = 1;
#endif

  ExperimentConfig config;
  config.task = "vqe";
  config.optimizers = {{"icans1"}, {"spsa", 100}};
  config.seed_count = 8;
  config.budgets = {budget};
  config.noise = shotopt::NoiseModel::default_on();

  std::printf("workload: vqe, icans1 + spsa-100, 8 seeds, N=%lld, noise on\n",
              budget);

  const auto t0 = clock::now();
  const auto serial = run_all(config, 1);
  const auto t1 = clock::now();
  const auto parallel = run_all(config, workers);
  const auto t2 = clock::now();

  const auto serial_rows = extract_checkpoints(config, serial);
  const auto parallel_rows = extract_checkpoints(config, parallel);
  bool identical = serial_rows.size() == parallel_rows.size();
  for (std::size_t i = 0; identical && i < serial_rows.size(); ++i) {
    identical = serial_rows[i].optimizer == parallel_rows[i].optimizer &&
                serial_rows[i].seed == parallel_rows[i].seed &&
                serial_rows[i].s_tot == parallel_rows[i].s_tot &&
                serial_rows[i].exact_cost == parallel_rows[i].exact_cost;
  }

  const double serial_s = std::chrono::duration<double>(t1 - t0).count();
  const double parallel_s = std::chrono::duration<double>(t2 - t1).count();
  std::printf("serial (1 worker):    %.3f s\n", serial_s);
  std::printf("parallel (%d workers): %.3f s\n", workers, parallel_s);
  std::printf("speedup: %.2fx\n", serial_s / parallel_s);
  std::printf("checkpoints identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
