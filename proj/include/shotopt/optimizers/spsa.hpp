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

#ifndef SHOTOPT_OPTIMIZERS_SPSA_HPP
#define SHOTOPT_OPTIMIZERS_SPSA_HPP

#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt {

/// Prefixed decay schedule: alpha_t = a / (A + t + 1)^s_exp,
/// c_t = c / (t + 1)^gamma_exp.
struct SpsaHyper {
  double a = 0.0;  // 0: calibrate from the first gradient estimate so the
                   // first step has magnitude ~ target_first_step
  double target_first_step = 0.1;
  double A = 0.0;  // stability constant; the runner sets ~10% of expected steps
  double s_exp = 0.602;
  double c = 0.1;
  double gamma_exp = 0.101;
};

struct SpsaState {
  std::vector<double> theta;
  long long t = 0;
  SpsaHyper hyper;
  bool calibrated = false;
};

/// Slope estimate in the perturbation direction:
/// g = (f_plus - f_minus) / (2 c_t) * delta^-1, element-wise.
std::vector<double> spsa_gradient(double f_plus, double f_minus, double c_t,
                                  std::span<const int> delta);

/// One SPSA step: sample delta with iid +-1 entries, estimate both cost
/// values with `shots` composite shots each, step along the estimated
/// slope. Consumes 2 * shots composite shots.
StepReport spsa_step(SpsaState& state, const Problem& problem, long long shots,
                     Rng& rng);

/// Fixed-shots SPSA baseline ("spsa-s").
class SpsaOptimizer : public Optimizer {
 public:
  SpsaOptimizer(long long shots_per_measurement, SpsaHyper hyper = {});

  std::string name() const override;
  long long min_first_iteration_cost(int) const override { return 2 * shots_; }
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

 private:
  long long shots_;
  SpsaHyper hyper_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_SPSA_HPP
