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

#ifndef SHOTOPT_OPTIMIZERS_ICANS_HPP
#define SHOTOPT_OPTIMIZERS_ICANS_HPP

#include <functional>

#include "shotopt/gradient.hpp"
#include "shotopt/optimizers/gain.hpp"
#include "shotopt/optimizers/optimizer.hpp"

namespace shotopt {

/// Shared hyperparameters of the shot-adaptive optimizers.
struct IcansHyper {
  double alpha = 0.1;      // learning rate; requires L * alpha < 2
  double mu = 0.99;        // running-average constant, in (0, 1)
  double bias = 1e-6;      // gradient-norm bias b, decayed as b * mu^k
  long long s_min = 2;     // floor on per-component shots, >= 2
  long long shot_ceiling = 0;  // optional noise-floor cap, 0 = off

  void validate(double lipschitz) const;
};

/// Full per-iteration working state of a shot-adaptive run.
struct IcansState {
  std::vector<double> theta;
  std::vector<double> chi;        // running-average gradient
  std::vector<double> xi;         // running-average variance
  std::vector<long long> shots;   // current per-component recommendation
  long long k = 0;                // iteration counter
  long long s_tot = 0;            // composite shots consumed
  IcansHyper hyper;
  double lipschitz = 0.0;
  long long budget = 0;
};

/// Everything one iteration computed, for observers and tests.
struct IcansIterationView {
  long long k = 0;
  const std::vector<long long>& shots_used;
  const std::vector<double>& g;
  const std::vector<double>& S;
  const std::vector<double>& chi;
  const std::vector<double>& xi;
  const std::vector<double>& alpha_eff;
  const std::vector<double>& gain_at_step;   // gain per shot at alpha_eff
  const std::vector<double>& gamma;          // gain per shot at the new s_i
  const std::vector<long long>& shots_next_raw;
  const std::vector<long long>& shots_next;
  int gain_argmax = 0;
  long long s_max = 0;
};

/// Clips raw shot recommendations to [s_min, s_max], where s_max is the
/// recommendation of the component with the highest expected gain per
/// shot (ties broken by lowest index). Falls back to s_min when that
/// recommendation is below it.
struct ShotClip {
  std::vector<long long> shots;
  int gain_argmax = 0;
  long long s_max = 0;
};
ShotClip clip_shots(std::span<const long long> raw,
                    std::span<const double> gamma, long long s_min);

/// Shot-adaptive stochastic gradient descent allocating shots per partial
/// derivative. Variant 1 always steps with alpha; variant 2 shrinks the
/// learning rate per component whenever that keeps the expected gain of
/// the step non-negative.
class IcansOptimizer : public Optimizer {
 public:
  using Observer = std::function<void(const IcansIterationView&)>;

  IcansOptimizer(int variant, IcansHyper hyper = {});

  std::string name() const override;
  long long min_first_iteration_cost(int dim) const override;
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

  void set_observer(Observer observer) { observer_ = std::move(observer); }

 private:
  int variant_;
  IcansHyper hyper_;
  Observer observer_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_ICANS_HPP
