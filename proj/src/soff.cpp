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

#include "shotopt/optimizers/soff.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shotopt {

namespace {
// Below this fitted amplitude the phase is numerically meaningless and
// the direction is treated as flat.
constexpr double kMinAmplitude = 1e-10;
}  // namespace

SinusoidFit fit_sinusoid(double x0, double f0, double f_plus, double f_minus) {
  SinusoidFit fit;
  fit.a = (f_plus + f_minus) / 2.0;
  const double u = f0 - fit.a;            // b cos(x0 - c)
  const double v = (f_minus - f_plus) / 2.0;  // b sin(x0 - c)
  fit.b = std::hypot(u, v);
  if (fit.b < kMinAmplitude) return fit;  // under-determined
  fit.c = x0 - std::atan2(v, u);
  fit.ok = true;
  return fit;
}

SoffSweepReport soff_sweep(const Problem& problem,
                           std::span<const double> theta,
                           std::span<const int> order, long long shots,
                           Rng& rng, std::optional<double> running_value) {
  if (shots < 1) throw std::invalid_argument("soff_sweep: shots < 1");
  SoffSweepReport report;
  report.theta.assign(theta.begin(), theta.end());

  double current;
  if (running_value.has_value()) {
    current = *running_value;
  } else {
    current = problem.sample_cost(report.theta, shots, rng).mean;
    report.shots_spent += shots;
  }

  std::vector<double> probe(report.theta.begin(), report.theta.end());
  for (int i : order) {
    const std::size_t idx = static_cast<std::size_t>(i);
    const double x0 = report.theta[idx];
    probe = report.theta;
    probe[idx] = x0 + std::numbers::pi / 2;
    const double f_plus = problem.sample_cost(probe, shots, rng).mean;
    probe[idx] = x0 - std::numbers::pi / 2;
    const double f_minus = problem.sample_cost(probe, shots, rng).mean;
    report.shots_spent += 2 * shots;

    const SinusoidFit fit = fit_sinusoid(x0, current, f_plus, f_minus);
    if (!fit.ok) {
      ++report.skipped;  // flat direction, leave theta_i in place
      continue;
    }
    report.theta[idx] = fit.c + std::numbers::pi;  // argmin of a + b cos(x - c)
    current = fit.a - fit.b;
  }
  report.running_value = current;
  return report;
}

SoffOptimizer::SoffOptimizer(long long shots_per_measurement)
    : shots_(shots_per_measurement) {
  if (shots_ < 1) throw std::invalid_argument("SoffOptimizer: shots < 1");
}

std::string SoffOptimizer::name() const {
  return "soff-" + std::to_string(shots_);
}

RunTrace SoffOptimizer::run(const Problem& problem,
                            std::span<const double> theta0, long long budget,
                            Rng& rng) const {
  if (budget < 1) throw std::invalid_argument("SoffOptimizer: budget < 1");
  const int dim = problem.param_count();
  std::vector<double> theta(theta0.begin(), theta0.end());

  RunTrace trace;
  trace.optimizer = name();
  trace.initial_exact_cost = problem.exact_cost(theta);

  long long s_tot = 0, executions = 0, iteration = 0;
  std::optional<double> running;
  int coordinate = 0;
  while (s_tot < budget) {
    // One trace iteration per coordinate update; the warm-up evaluation
    // folds into the first one.
    const std::array<int, 1> order = {coordinate};
    const SoffSweepReport sweep =
        soff_sweep(problem, theta, order, shots_, rng, running);
    theta = sweep.theta;
    running = sweep.running_value;
    s_tot += sweep.shots_spent;
    executions += sweep.shots_spent * problem.group_count();

    IterationRecord rec;
    rec.iteration = iteration++;
    rec.consumed = sweep.shots_spent;
    rec.s_tot = s_tot;
    rec.shots_sum = sweep.shots_spent;
    rec.shots_min = shots_;
    rec.shots_max = shots_;
    rec.alpha_min = rec.alpha_max = 0.0;  // not a gradient-descent step
    rec.est_cost = sweep.running_value;
    rec.exact_cost = problem.exact_cost(theta);
    trace.records.push_back(rec);

    coordinate = (coordinate + 1) % dim;
  }
  trace.theta_final = theta;
  trace.total_composite_shots = s_tot;
  trace.total_executions = executions;
  return trace;
}

}  // namespace shotopt
