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

#include "shotopt/optimizers/cans.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shotopt {

CansOptimizer::CansOptimizer(IcansHyper hyper) : hyper_(hyper) {}

RunTrace CansOptimizer::run(const Problem& problem,
                            std::span<const double> theta0, long long budget,
                            Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("cans: budget < 1");
  const double L = problem.lipschitz();
  hyper_.validate(L);
  const std::size_t dim = static_cast<std::size_t>(problem.param_count());
  const double alpha = hyper_.alpha;

  CansState state;
  state.theta.assign(theta0.begin(), theta0.end());
  state.chi.assign(dim, 0.0);
  state.shots = hyper_.s_min;
  state.hyper = hyper_;
  state.lipschitz = L;
  state.budget = budget;

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(state.theta);
  long long executions = 0;

  while (state.s_tot < budget) {
    const std::vector<long long> shots_vec(dim, state.shots);
    const GradientEstimate est = estimate_gradient(
        problem, state.theta, shots_vec, GradMethod::ParameterShift, rng);
    // Coupled accounting counts one shot pair per iteration, not per
    // component; honest raw executions are tracked alongside.
    const long long consumed = 2 * state.shots;
    state.s_tot += consumed;
    executions += est.executions;

    for (std::size_t i = 0; i < dim; ++i)
      state.theta[i] -= alpha * est.g[i];

    double s_norm1 = 0.0, chi_norm_sq = 0.0;
    for (double Si : est.S) s_norm1 += Si;
    state.xi = hyper_.mu * state.xi + (1.0 - hyper_.mu) * s_norm1;
    for (std::size_t i = 0; i < dim; ++i) {
      state.chi[i] = hyper_.mu * state.chi[i] + (1.0 - hyper_.mu) * est.g[i];
      chi_norm_sq += state.chi[i] * state.chi[i];
    }

    long long next = recommended_shots(alpha, L, state.xi,
                                       std::sqrt(chi_norm_sq), hyper_.bias,
                                       hyper_.mu, state.k);
    next = std::max(next, hyper_.s_min);
    if (hyper_.shot_ceiling > 0)
      next = std::min(next, std::max(hyper_.shot_ceiling, hyper_.s_min));
    const long long remaining_pairs =
        std::max<long long>(hyper_.s_min, (budget - state.s_tot + 1) / 2);
    if (state.s_tot < budget) next = std::min(next, remaining_pairs);

    IterationRecord rec;
    rec.iteration = state.k;
    rec.consumed = consumed;
    rec.s_tot = state.s_tot;
    rec.shots_per_component.assign(dim, state.shots);
    rec.shots_sum = static_cast<long long>(dim) * state.shots;
    rec.shots_min = state.shots;
    rec.shots_max = state.shots;
    rec.alpha_min = rec.alpha_max = alpha;
    rec.exact_cost = problem.exact_cost(state.theta);
    trace.records.push_back(rec);

    state.shots = next;
    ++state.k;
  }

  trace.theta_final = state.theta;
  trace.total_composite_shots = state.s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
