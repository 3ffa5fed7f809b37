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

#include "shotopt/optimizers/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace shotopt {

AdamState::AdamState(std::vector<double> theta0, AdamHyper hyper_)
    : theta(std::move(theta0)),
      m(theta.size(), 0.0),
      v(theta.size(), 0.0),
      hyper(hyper_) {
  if (!(hyper.beta1 >= 0.0 && hyper.beta1 < 1.0) ||
      !(hyper.beta2 >= 0.0 && hyper.beta2 < 1.0))
    throw std::invalid_argument("AdamState: beta1, beta2 must be in [0,1)");
  if (!(hyper.alpha > 0.0) || !(hyper.epsilon > 0.0))
    throw std::invalid_argument("AdamState: alpha and epsilon must be > 0");
}

StepReport adam_step(AdamState& state, const GradientEstimate& gradient) {
  if (gradient.g.size() != state.theta.size())
    throw std::invalid_argument("adam_step: dimension mismatch");
  ++state.t;
  const double bias1 = 1.0 - std::pow(state.hyper.beta1, static_cast<double>(state.t));
  const double bias2 = 1.0 - std::pow(state.hyper.beta2, static_cast<double>(state.t));
  for (std::size_t i = 0; i < state.theta.size(); ++i) {
    const double g = gradient.g[i];
    state.m[i] = state.hyper.beta1 * state.m[i] + (1.0 - state.hyper.beta1) * g;
    state.v[i] = state.hyper.beta2 * state.v[i] + (1.0 - state.hyper.beta2) * g * g;
    const double m_hat = state.m[i] / bias1;
    const double v_hat = state.v[i] / bias2;
    state.theta[i] -= state.hyper.alpha * m_hat / (std::sqrt(v_hat) + state.hyper.epsilon);
  }
  StepReport report;
  report.theta_new = state.theta;
  report.shots_spent = gradient.composite_shots();
  report.alpha_eff.assign(state.theta.size(), state.hyper.alpha);
  return report;
}

AdamOptimizer::AdamOptimizer(long long shots_per_measurement, AdamHyper hyper)
    : shots_(shots_per_measurement), hyper_(hyper) {
  if (shots_ < 1) throw std::invalid_argument("AdamOptimizer: shots < 1");
}

std::string AdamOptimizer::name() const {
  return "adam-" + std::to_string(shots_);
}

long long AdamOptimizer::min_first_iteration_cost(int dim) const {
  return 2 * static_cast<long long>(dim) * shots_;
}

RunTrace AdamOptimizer::run(const Problem& problem,
                            std::span<const double> theta0, long long budget,
                            Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("AdamOptimizer: budget < 1");
  const int dim = problem.param_count();
  AdamState state(std::vector<double>(theta0.begin(), theta0.end()), hyper_);
  const std::vector<long long> shots(static_cast<std::size_t>(dim), shots_);

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(state.theta);
  long long s_tot = 0, executions = 0, iteration = 0;
  while (s_tot < budget) {
    const GradientEstimate est =
        estimate_gradient(problem, state.theta, shots, GradMethod::ParameterShift, rng);
    executions += est.executions;
    const StepReport step = adam_step(state, est);
    s_tot += step.shots_spent;

    IterationRecord rec;
    rec.iteration = iteration++;
    rec.consumed = step.shots_spent;
    rec.s_tot = s_tot;
    rec.shots_per_component = shots;
    rec.shots_sum = static_cast<long long>(dim) * shots_;
    rec.shots_min = shots_;
    rec.shots_max = shots_;
    rec.alpha_min = rec.alpha_max = hyper_.alpha;
    rec.exact_cost = problem.exact_cost(state.theta);
    trace.records.push_back(rec);
  }
  trace.theta_final = state.theta;
  trace.total_composite_shots = s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
