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

#ifndef SHOTOPT_BENCH_CONFIG_HPP
#define SHOTOPT_BENCH_CONFIG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shotopt/optimizers/adam.hpp"
#include "shotopt/optimizers/icans.hpp"
#include "shotopt/optimizers/spsa.hpp"
#include "shotopt/problems.hpp"

namespace shotopt::bench {

/// One optimizer entry of an experiment. Fixed-shots baselines carry the
/// per-measurement shot count in `shots` and render as "name-shots".
struct OptimizerSpec {
  std::string kind;           // icans1 icans2 cans gd adam spsa soff
  long long shots = 0;        // required for gd/adam/spsa/soff
  std::optional<double> alpha;  // per-optimizer learning-rate override

  std::string label() const;
};

struct ExperimentConfig {
  std::string task = "compile";  // "compile" | "vqe"
  int n = 3;
  int D = 6;
  double J = 1.0;
  double B = 3.0;
  std::vector<OptimizerSpec> optimizers;
  std::vector<std::uint64_t> seeds;  // explicit seed list, optional
  std::uint64_t master_seed = 2026;
  int seed_count = 20;
  std::vector<long long> budgets{1000, 10000, 100000, 1000000};
  NoiseModel noise;  // noise.enabled toggles the noisy benchmark
  IcansHyper hyper;
  AdamHyper adam;
  SpsaHyper spsa;
  double gd_alpha = 0.1;
  bool use_spectrum_lipschitz = true;
  bool full_scale = false;
  std::string out_dir = "out";

  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);

  /// Throws std::invalid_argument with a diagnostic on any bad field.
  void validate() const;

  /// Explicit seeds, or seed_count seeds derived from master_seed.
  std::vector<std::uint64_t> effective_seeds() const;

  std::unique_ptr<Optimizer> make_optimizer(const OptimizerSpec& spec,
                                            long long max_budget) const;

  /// Problem instance and starting point for one seed. theta_star (for
  /// compiling) and theta0 are drawn uniformly from [0, 2*pi).
  struct Instance {
    std::shared_ptr<Problem> problem;
    std::vector<double> theta0;
  };
  Instance make_instance(std::uint64_t seed) const;

  int param_dimension() const { return 2 * n * (D + 1); }
};

}  // namespace shotopt::bench

#endif  // SHOTOPT_BENCH_CONFIG_HPP
