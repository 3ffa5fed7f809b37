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

#include "shotopt/optimizers/icans.hpp"

#include <algorithm>
#include <stdexcept>

namespace shotopt {

void IcansHyper::validate(double lipschitz) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("icans: alpha must be > 0");
  if (!(lipschitz * alpha < 2.0))
    throw std::invalid_argument("icans: requires L * alpha < 2");
  if (!(mu > 0.0 && mu < 1.0))
    throw std::invalid_argument("icans: mu must be in (0, 1)");
  if (!(bias > 0.0)) throw std::invalid_argument("icans: bias must be > 0");
  if (s_min < 2) throw std::invalid_argument("icans: s_min must be >= 2");
  if (shot_ceiling < 0) throw std::invalid_argument("icans: bad shot ceiling");
}

ShotClip clip_shots(std::span<const long long> raw,
                    std::span<const double> gamma, long long s_min) {
  if (raw.size() != gamma.size() || raw.empty())
    throw std::invalid_argument("clip_shots: bad inputs");
  ShotClip clip;
  clip.gain_argmax = 0;
  for (std::size_t i = 1; i < gamma.size(); ++i)
    if (gamma[i] > gamma[static_cast<std::size_t>(clip.gain_argmax)])
      clip.gain_argmax = static_cast<int>(i);
  clip.s_max = raw[static_cast<std::size_t>(clip.gain_argmax)];
  const long long hi = std::max(clip.s_max, s_min);
  clip.shots.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    clip.shots[i] = std::clamp(raw[i], s_min, hi);
  return clip;
}

IcansOptimizer::IcansOptimizer(int variant, IcansHyper hyper)
    : variant_(variant), hyper_(hyper) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("IcansOptimizer: variant must be 1 or 2");
}

std::string IcansOptimizer::name() const {
  return variant_ == 1 ? "icans1" : "icans2";
}

long long IcansOptimizer::min_first_iteration_cost(int dim) const {
  return 2 * static_cast<long long>(dim) * hyper_.s_min;
}

RunTrace IcansOptimizer::run(const Problem& problem,
                             std::span<const double> theta0, long long budget,
                             Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("icans: budget < 1");
  const double L = problem.lipschitz();
  hyper_.validate(L);
  const std::size_t dim = static_cast<std::size_t>(problem.param_count());
  const double alpha = hyper_.alpha;

  IcansState state;
  state.theta.assign(theta0.begin(), theta0.end());
  state.chi.assign(dim, 0.0);
  state.xi.assign(dim, 0.0);
  state.shots.assign(dim, hyper_.s_min);
  state.hyper = hyper_;
  state.lipschitz = L;
  state.budget = budget;

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(state.theta);
  long long executions = 0;

  std::vector<double> alpha_eff(dim), gain_at_step(dim), gamma(dim);
  std::vector<long long> raw(dim);

  while (state.s_tot < budget) {
    const std::vector<long long> shots_used = state.shots;
    const GradientEstimate est = estimate_gradient(
        problem, state.theta, shots_used, GradMethod::ParameterShift, rng);
    const long long consumed = est.composite_shots();
    state.s_tot += consumed;
    executions += est.executions;

    for (std::size_t i = 0; i < dim; ++i) {
      state.xi[i] = hyper_.mu * state.xi[i] + (1.0 - hyper_.mu) * est.S[i];
      state.chi[i] = hyper_.mu * state.chi[i] + (1.0 - hyper_.mu) * est.g[i];
    }

    for (std::size_t i = 0; i < dim; ++i) {
      double a_i = alpha;
      if (variant_ == 2) {
        const double safe =
            safe_learning_rate(L, state.chi[i], state.xi[i], shots_used[i]);
        if (alpha > safe) a_i = safe;
      }
      state.theta[i] -= a_i * est.g[i];
      alpha_eff[i] = a_i;
      gain_at_step[i] = expected_gain_per_shot(a_i, L, state.chi[i],
                                               state.xi[i], shots_used[i]);
      raw[i] = recommended_shots(alpha, L, state.xi[i], state.chi[i],
                                 hyper_.bias, hyper_.mu, state.k);
      gamma[i] = expected_gain_per_shot(alpha, L, state.chi[i], state.xi[i],
                                        std::max<long long>(raw[i], 1));
    }

    ShotClip clip = clip_shots(raw, gamma, hyper_.s_min);
    if (hyper_.shot_ceiling > 0)
      for (auto& s : clip.shots)
        s = std::min(s, std::max(hyper_.shot_ceiling, hyper_.s_min));
    // A single component never needs more pairs than would end the run.
    const long long remaining_pairs =
        std::max<long long>(hyper_.s_min, (budget - state.s_tot + 1) / 2);
    if (state.s_tot < budget)
      for (auto& s : clip.shots) s = std::min(s, remaining_pairs);

    if (observer_) {
      IcansIterationView view{state.k,  shots_used, est.g,       est.S,
                              state.chi, state.xi,   alpha_eff,   gain_at_step,
                              gamma,     raw,        clip.shots,  clip.gain_argmax,
                              clip.s_max};
      observer_(view);
    }

    IterationRecord rec;
    rec.iteration = state.k;
    rec.consumed = consumed;
    rec.s_tot = state.s_tot;
    rec.shots_per_component = shots_used;
    rec.shots_sum = consumed / 2;
    rec.shots_min = *std::min_element(shots_used.begin(), shots_used.end());
    rec.shots_max = *std::max_element(shots_used.begin(), shots_used.end());
    rec.alpha_min = *std::min_element(alpha_eff.begin(), alpha_eff.end());
    rec.alpha_max = *std::max_element(alpha_eff.begin(), alpha_eff.end());
    rec.min_gain = *std::min_element(gain_at_step.begin(), gain_at_step.end());
    rec.exact_cost = problem.exact_cost(state.theta);
    trace.records.push_back(rec);

    state.shots = std::move(clip.shots);
    ++state.k;
  }

  trace.theta_final = state.theta;
  trace.total_composite_shots = state.s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
