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

#ifndef SHOTOPT_OPTIMIZERS_OPTIMIZER_HPP
#define SHOTOPT_OPTIMIZERS_OPTIMIZER_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "shotopt/problem.hpp"

namespace shotopt {

/// Outcome of one optimizer step, for the step-level entry points.
struct StepReport {
  std::vector<double> theta_new;
  long long shots_spent = 0;            // composite shots this step
  std::vector<double> gamma;            // expected gain per shot, when defined
  std::vector<double> alpha_eff;        // effective learning rates used
  // Sampled cost estimate, for optimizers that evaluate the cost itself.
  double est_cost = std::numeric_limits<double>::quiet_NaN();
};

/// One completed iteration of a budgeted run.
struct IterationRecord {
  long long iteration = 0;
  long long consumed = 0;       // composite shots declared for this iteration
  long long s_tot = 0;          // running total after this iteration
  std::vector<long long> shots_per_component;  // as used by this iteration
  long long shots_sum = 0;      // sum over components of shots used
  long long shots_min = 0;
  long long shots_max = 0;
  double alpha_min = 0.0;       // effective learning-rate range this iteration
  double alpha_max = 0.0;
  double min_gain = std::numeric_limits<double>::quiet_NaN();
  double est_cost = std::numeric_limits<double>::quiet_NaN();
  double exact_cost = 0.0;      // noiseless oracle at the post-step parameters
};

/// Iteration-indexed log of a full budgeted run.
struct RunTrace {
  std::string optimizer;
  std::vector<IterationRecord> records;
  std::vector<double> theta_final;
  double initial_exact_cost = 0.0;
  long long total_composite_shots = 0;  // equals records.back().s_tot
  long long total_executions = 0;       // raw circuit executions
};

/// Uniform contract: initialize at theta0, advance until the composite-
/// shot budget is spent (the loop exits on the first iteration where
/// s_tot >= budget, so overshoot is at most one iteration), return the
/// trace.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual std::string name() const = 0;
  /// Composite shots the first iteration needs; budgets below this are
  /// unreachable and reported as absent.
  virtual long long min_first_iteration_cost(int dim) const = 0;
  virtual RunTrace run(const Problem& problem, std::span<const double> theta0,
                       long long budget, Rng& rng) const = 0;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_OPTIMIZER_HPP
