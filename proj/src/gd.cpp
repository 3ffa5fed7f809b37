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

#include "shotopt/optimizers/gd.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>

namespace shotopt {

StepReport gd_step(GdState& state, const GradientEstimate& gradient) {
  if (gradient.g.size() != state.theta.size())
    throw std::invalid_argument("gd_step: dimension mismatch");
  if (state.lipschitz > 0.0 && !(state.alpha < 2.0 / state.lipschitz)) {
    static std::once_flag warned;
    std::call_once(warned, [&] {
      std::fprintf(stderr,
                   "gd_step: alpha=%g >= 2/L=%g, convergence not guaranteed\n",
                   state.alpha, 2.0 / state.lipschitz);
    });
  }
  for (std::size_t i = 0; i < state.theta.size(); ++i)
    state.theta[i] -= state.alpha * gradient.g[i];
  StepReport report;
  report.theta_new = state.theta;
  report.shots_spent = gradient.composite_shots();
  report.alpha_eff.assign(state.theta.size(), state.alpha);
  return report;
}

GdOptimizer::GdOptimizer(long long shots_per_measurement, double alpha)
    : shots_(shots_per_measurement), alpha_(alpha) {
  if (shots_ < 1) throw std::invalid_argument("GdOptimizer: shots < 1");
  if (!(alpha_ > 0.0)) throw std::invalid_argument("GdOptimizer: alpha <= 0");
}

std::string GdOptimizer::name() const {
  return "gd-" + std::to_string(shots_);
}

long long GdOptimizer::min_first_iteration_cost(int dim) const {
  return 2 * static_cast<long long>(dim) * shots_;
}

RunTrace GdOptimizer::run(const Problem& problem,
                          std::span<const double> theta0, long long budget,
                          Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("GdOptimizer: budget < 1");
  const int dim = problem.param_count();
  GdState state{std::vector<double>(theta0.begin(), theta0.end()), alpha_,
                problem.lipschitz()};
  const std::vector<long long> shots(static_cast<std::size_t>(dim), shots_);

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(state.theta);
  long long s_tot = 0, executions = 0, iteration = 0;
  while (s_tot < budget) {
    const GradientEstimate est =
        estimate_gradient(problem, state.theta, shots, GradMethod::ParameterShift, rng);
    executions += est.executions;
    const StepReport step = gd_step(state, est);
    s_tot += step.shots_spent;

    IterationRecord rec;
    rec.iteration = iteration++;
    rec.consumed = step.shots_spent;
    rec.s_tot = s_tot;
    rec.shots_per_component = shots;
    rec.shots_sum = static_cast<long long>(dim) * shots_;
    rec.shots_min = shots_;
    rec.shots_max = shots_;
    rec.alpha_min = rec.alpha_max = alpha_;
    rec.exact_cost = problem.exact_cost(state.theta);
    trace.records.push_back(rec);
  }
  trace.theta_final = state.theta;
  trace.total_composite_shots = s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
