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

#include "shotopt/optimizers/spsa.hpp"

#include <cmath>
#include <stdexcept>

namespace shotopt {

std::vector<double> spsa_gradient(double f_plus, double f_minus, double c_t,
                                  std::span<const int> delta) {
  if (!(c_t > 0.0)) throw std::invalid_argument("spsa_gradient: c_t <= 0");
  const double slope = (f_plus - f_minus) / (2.0 * c_t);
  std::vector<double> g(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i)
    g[i] = slope / static_cast<double>(delta[i]);
  return g;
}

StepReport spsa_step(SpsaState& state, const Problem& problem, long long shots,
                     Rng& rng) {
  if (shots < 1) throw std::invalid_argument("spsa_step: shots < 1");
  const std::size_t dim = state.theta.size();
  const double t = static_cast<double>(state.t);
  const double c_t = state.hyper.c / std::pow(t + 1.0, state.hyper.gamma_exp);

  std::vector<int> delta(dim);
  for (auto& d : delta) d = rng.plus_minus_one();
  std::vector<double> shifted(dim);
  for (std::size_t i = 0; i < dim; ++i)
    shifted[i] = state.theta[i] + c_t * delta[i];
  const double f_plus = problem.sample_cost(shifted, shots, rng).mean;
  for (std::size_t i = 0; i < dim; ++i)
    shifted[i] = state.theta[i] - c_t * delta[i];
  const double f_minus = problem.sample_cost(shifted, shots, rng).mean;

  const std::vector<double> g = spsa_gradient(f_plus, f_minus, c_t, delta);

  if (!state.calibrated && state.hyper.a <= 0.0) {
    // Size a from this very estimate so the first update has the target
    // magnitude; |g_i| is the same for every component with +-1 entries.
    const double magnitude = std::abs(g[0]);
    const double scale = std::pow(state.hyper.A + 1.0, state.hyper.s_exp);
    state.hyper.a = magnitude > 1e-8
                        ? state.hyper.target_first_step * scale / magnitude
                        : state.hyper.target_first_step * scale;
  }
  state.calibrated = true;

  const double alpha_t =
      state.hyper.a / std::pow(state.hyper.A + t + 1.0, state.hyper.s_exp);
  for (std::size_t i = 0; i < dim; ++i) state.theta[i] -= alpha_t * g[i];
  ++state.t;

  StepReport report;
  report.theta_new = state.theta;
  report.shots_spent = 2 * shots;
  report.alpha_eff.assign(dim, alpha_t);
  report.est_cost = (f_plus + f_minus) / 2.0;
  return report;
}

SpsaOptimizer::SpsaOptimizer(long long shots_per_measurement, SpsaHyper hyper)
    : shots_(shots_per_measurement), hyper_(hyper) {
  if (shots_ < 1) throw std::invalid_argument("SpsaOptimizer: shots < 1");
}

std::string SpsaOptimizer::name() const {
  return "spsa-" + std::to_string(shots_);
}

RunTrace SpsaOptimizer::run(const Problem& problem,
                            std::span<const double> theta0, long long budget,
                            Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("SpsaOptimizer: budget < 1");
  SpsaHyper hyper = hyper_;
  if (hyper.A <= 0.0) {
    const double expected_steps =
        static_cast<double>(budget) / static_cast<double>(2 * shots_);
    hyper.A = 0.1 * expected_steps;
  }
  SpsaState state{std::vector<double>(theta0.begin(), theta0.end()), 0, hyper,
                  false};

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(state.theta);
  long long s_tot = 0, executions = 0, iteration = 0;
  while (s_tot < budget) {
    const StepReport step = spsa_step(state, problem, shots_, rng);
    s_tot += step.shots_spent;
    executions += step.shots_spent * problem.group_count();

    IterationRecord rec;
    rec.iteration = iteration++;
    rec.consumed = step.shots_spent;
    rec.s_tot = s_tot;
    rec.shots_sum = 2 * shots_;
    rec.shots_min = shots_;
    rec.shots_max = shots_;
    rec.alpha_min = rec.alpha_max = step.alpha_eff.front();
    rec.est_cost = step.est_cost;
    rec.exact_cost = problem.exact_cost(state.theta);
    trace.records.push_back(rec);
  }
  trace.theta_final = state.theta;
  trace.total_composite_shots = s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
