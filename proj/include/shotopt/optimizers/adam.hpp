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

#ifndef SHOTOPT_OPTIMIZERS_ADAM_HPP
#define SHOTOPT_OPTIMIZERS_ADAM_HPP

#include "shotopt/gradient.hpp"
#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt {

struct AdamHyper {
  double alpha = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// First/second-moment running averages with bias correction.
struct AdamState {
  std::vector<double> theta;
  std::vector<double> m;
  std::vector<double> v;
  long long t = 0;  // completed steps
  AdamHyper hyper;

  AdamState(std::vector<double> theta0, AdamHyper hyper_ = {});
};

/// One Adam update: decayed moment averages, bias-corrected m-hat/v-hat,
/// theta <- theta - alpha * m_hat / (sqrt(v_hat) + epsilon).
StepReport adam_step(AdamState& state, const GradientEstimate& gradient);

/// Fixed-shots Adam baseline ("adam-s").
class AdamOptimizer : public Optimizer {
 public:
  AdamOptimizer(long long shots_per_measurement, AdamHyper hyper = {});

  std::string name() const override;
  long long min_first_iteration_cost(int dim) const override;
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

 private:
  long long shots_;
  AdamHyper hyper_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_ADAM_HPP
