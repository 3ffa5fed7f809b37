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

#ifndef SHOTOPT_OPTIMIZERS_CANS_HPP
#define SHOTOPT_OPTIMIZERS_CANS_HPP

#include "shotopt/optimizers/icans.hpp"

namespace shotopt {

/// Working state of a coupled (single shot count) adaptive run.
struct CansState {
  std::vector<double> theta;
  std::vector<double> chi;  // running-average gradient
  double xi = 0.0;          // running average of ||S||_1
  long long shots = 0;      // shared shot count
  long long k = 0;
  long long s_tot = 0;
  IcansHyper hyper;
  double lipschitz = 0.0;
  long long budget = 0;
};

/// Coupled adaptive number of shots: one shared shot count sized from the
/// full gradient norm, s = ceil((2 L a / (2 - L a)) xi / (||chi||^2 + b mu^k)),
/// floored at s_min. Accounting follows the coupled scheme literally
/// (2 s per iteration); the trace additionally logs raw executions, which
/// scale with the parameter count.
class CansOptimizer : public Optimizer {
 public:
  explicit CansOptimizer(IcansHyper hyper = {});

  std::string name() const override { return "cans"; }
  long long min_first_iteration_cost(int) const override {
    return 2 * hyper_.s_min;
  }
  RunTrace run(const Problem& problem, std::span<const double> theta0,
               long long budget, Rng& rng) const override;

 private:
  IcansHyper hyper_;
};

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_CANS_HPP
