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

#ifndef SHOTOPT_OPTIMIZERS_SOFF_HPP
#define SHOTOPT_OPTIMIZERS_SOFF_HPP

#include <optional>

#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt {

/// Coordinate restriction of the cost: f(x) = a + b * cos(x - c).
struct SinusoidFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool ok = false;  // false when the fit is under-determined (b ~ 0)
};

/// Solves the three-point system from f(x0), f(x0 + pi/2), f(x0 - pi/2).
SinusoidFit fit_sinusoid(double x0, double f0, double f_plus, double f_minus);

/// Result of one full coordinate sweep.
struct SoffSweepReport {
  std::vector<double> theta;
  double running_value = 0.0;  // model value at the final parameters
  long long shots_spent = 0;   // composite shots, including the warm-up
  int skipped = 0;             // coordinates left unchanged (flat fit)
};

/// Sequential function fitting over `order`: per coordinate, two fresh
/// evaluations at theta_i +- pi/2 (s shots each) joined with the running
/// value at theta_i, then theta_i jumps to the fitted minimum c + pi.
/// When no running value is supplied, one extra evaluation at the start
/// provides it.
SoffSweepReport soff_sweep(const Problem& problem,
                           std::span<const double> theta,
                           std::span<const int> order, long long shots,
                           Rng& rng,
                           std::optional<double> running_value = std::nullopt);

/// Fixed-shots sequential-fitting optimizer ("soff-s"). Each trace
/// iteration is one coordinate update.
class SoffOptimizer : public Optimizer {
 public:
  explicit SoffOptimizer(long long shots_per_measurement);

  std::string name() const override;
  // Warm-up evaluation plus the first coordinate's two evaluations.
  long long min_first_iteration_cost(int) const override { return 3 * shots_; }
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

 private:
  long long shots_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_SOFF_HPP
