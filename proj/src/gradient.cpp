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

#include "shotopt/gradient.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shotopt/spectra.hpp"

namespace shotopt {

SampleResult Problem::sample_cost(std::span<const double> theta,
                                  long long shots, Rng& rng) const {
  if (shots < 1) throw std::invalid_argument("sample_cost: shots < 1");
  std::vector<double> outcomes;
  outcomes.reserve(static_cast<std::size_t>(shots));
  sample_cost_outcomes(theta, shots, rng, outcomes);
  const auto [mean, variance] = mean_and_variance(outcomes);
  return {mean, variance, shots, shots * group_count()};
}

double analytic_partial(const Problem& problem, std::span<const double> theta,
                        int index) {
  std::vector<double> shifted(theta.begin(), theta.end());
  const std::size_t i = static_cast<std::size_t>(index);
  shifted[i] = theta[i] + std::numbers::pi / 2;
  const double plus = problem.exact_cost(shifted);
  shifted[i] = theta[i] - std::numbers::pi / 2;
  const double minus = problem.exact_cost(shifted);
  return (plus - minus) / 2.0;
}

std::vector<double> analytic_gradient(const Problem& problem,
                                      std::span<const double> theta) {
  std::vector<double> grad(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i)
    grad[i] = analytic_partial(problem, theta, static_cast<int>(i));
  return grad;
}

namespace {

std::pair<double, double> paired_shift_estimate(const Problem& problem,
                                                std::span<const double> theta,
                                                int index, long long shots,
                                                double shift, double divisor,
                                                Rng& rng) {
  if (shots < 1) throw std::invalid_argument("gradient estimate: shots < 1");
  if (index < 0 || index >= problem.param_count())
    throw std::invalid_argument("gradient estimate: component out of range");
  std::vector<double> shifted(theta.begin(), theta.end());
  const std::size_t i = static_cast<std::size_t>(index);

  std::vector<double> plus, minus;
  plus.reserve(static_cast<std::size_t>(shots));
  minus.reserve(static_cast<std::size_t>(shots));
  shifted[i] = theta[i] + shift;
  problem.sample_cost_outcomes(shifted, shots, rng, plus);
  shifted[i] = theta[i] - shift;
  problem.sample_cost_outcomes(shifted, shots, rng, minus);

  std::vector<double> samples(static_cast<std::size_t>(shots));
  for (std::size_t k = 0; k < samples.size(); ++k)
    samples[k] = (plus[k] - minus[k]) / divisor;
  return mean_and_variance(samples);
}

}  // namespace

long long GradientEstimate::composite_shots() const {
  long long total = 0;
  for (long long si : s) total += si;
  return 2 * total;
}

std::pair<double, double> parameter_shift_partial(const Problem& problem,
                                                  std::span<const double> theta,
                                                  int index, long long shots,
                                                  Rng& rng) {
  return paired_shift_estimate(problem, theta, index, shots,
                               std::numbers::pi / 2, 2.0, rng);
}

std::pair<double, double> finite_difference_partial(
    const Problem& problem, std::span<const double> theta, int index,
    long long shots, const FiniteDifferenceConfig& cfg, Rng& rng) {
  if (!(cfg.delta > 0.0))
    throw std::invalid_argument("finite_difference_partial: delta must be > 0");
  return paired_shift_estimate(problem, theta, index, shots, cfg.delta,
                               2.0 * cfg.delta, rng);
}

GradientEstimate estimate_gradient(const Problem& problem,
                                   std::span<const double> theta,
                                   std::span<const long long> shots,
                                   GradMethod method, Rng& rng,
                                   const FiniteDifferenceConfig& cfg) {
  const std::size_t dim = static_cast<std::size_t>(problem.param_count());
  if (theta.size() != dim || shots.size() != dim)
    throw std::invalid_argument("estimate_gradient: dimension mismatch");
  GradientEstimate est;
  est.g.resize(dim);
  est.S.resize(dim);
  est.s.assign(shots.begin(), shots.end());
  for (std::size_t i = 0; i < dim; ++i) {
    const auto [g, S] =
        method == GradMethod::ParameterShift
            ? parameter_shift_partial(problem, theta, static_cast<int>(i),
                                      shots[i], rng)
            : finite_difference_partial(problem, theta, static_cast<int>(i),
                                        shots[i], cfg, rng);
    est.g[i] = g;
    est.S[i] = S;
    est.executions += 2 * shots[i] * problem.group_count();
  }
  return est;
}

double lipschitz_bound(const PauliObservable& obs, bool use_spectrum,
                       int max_qubits) {
  if (!use_spectrum) return obs.coefficient_norm();
  const EigenBounds bounds = eigen_bounds(obs, max_qubits);
  return (bounds.max - bounds.min) / 2.0;
}

}  // namespace shotopt
