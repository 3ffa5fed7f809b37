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

#ifndef SHOTOPT_PROBLEM_HPP
#define SHOTOPT_PROBLEM_HPP

#include <span>
#include <vector>

#include "shotopt/rng.hpp"
#include "shotopt/sampling.hpp"

namespace shotopt {

/// A cost function accessible two ways: through finite-shot sampling (the
/// only access an optimizer gets) and through an exact noiseless oracle
/// (used for traces, reports and tests). Implementations are immutable
/// after construction and safe to share across parallel runs.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual int param_count() const = 0;
  /// Circuit executions consumed by one composite shot.
  virtual int group_count() const = 0;
  /// Upper bound on the cost's gradient Lipschitz constant.
  virtual double lipschitz() const = 0;

  /// Appends `shots` single-shot cost samples to `out`.
  virtual void sample_cost_outcomes(std::span<const double> theta,
                                    long long shots, Rng& rng,
                                    std::vector<double>& out) const = 0;

  /// Exact cost, always evaluated without noise.
  virtual double exact_cost(std::span<const double> theta) const = 0;

  SampleResult sample_cost(std::span<const double> theta, long long shots,
                           Rng& rng) const;
};

/// Exact partial derivative via the +-pi/2 shift rule applied to the
/// noiseless oracle. Valid for costs whose parameters each drive one
/// rotation gate, which holds for every circuit problem here.
double analytic_partial(const Problem& problem, std::span<const double> theta,
                        int index);

/// Full analytic gradient, one shift pair per component.
std::vector<double> analytic_gradient(const Problem& problem,
                                      std::span<const double> theta);

}  // namespace shotopt

#endif  // SHOTOPT_PROBLEM_HPP
