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

#ifndef SHOTOPT_OPTIMIZERS_GD_HPP
#define SHOTOPT_OPTIMIZERS_GD_HPP

#include "shotopt/gradient.hpp"
#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt {

struct GdState {
  std::vector<double> theta;
  double alpha = 0.1;
  double lipschitz = 0.0;  // 0 disables the step-size check
};

/// theta <- theta - alpha * g. Warns (once, to stderr) when
/// alpha >= 2 / L, where plain gradient descent loses its convergence
/// guarantee; the step is still taken.
StepReport gd_step(GdState& state, const GradientEstimate& gradient);

/// Fixed-shots gradient descent baseline ("gd-s").
class GdOptimizer : public Optimizer {
 public:
  GdOptimizer(long long shots_per_measurement, double alpha = 0.1);

  std::string name() const override;
  long long min_first_iteration_cost(int dim) const override;
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

 private:
  long long shots_;
  double alpha_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_GD_HPP
