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

#ifndef SHOTOPT_GRADIENT_HPP
#define SHOTOPT_GRADIENT_HPP

#include <span>
#include <vector>

#include "shotopt/problem.hpp"
#include "shotopt/pauli.hpp"

namespace shotopt {

/// Per-component gradient estimate. g holds the estimated partial
/// derivatives, S the unbiased single-shot variance of each derivative
/// sample, s the composite shots spent per component.
struct GradientEstimate {
  std::vector<double> g;
  std::vector<double> S;
  std::vector<long long> s;
  long long executions = 0;

  /// Composite shots consumed: 2 * sum(s), one pair per sample.
  long long composite_shots() const;
};

struct FiniteDifferenceConfig {
  double delta = 1e-5;  // radians, > 0
};

enum class GradMethod { ParameterShift, FiniteDifference };

/// Estimated partial derivative and its single-shot variance from `shots`
/// paired samples at theta +- pi/2 e_i. The k-th sample at +pi/2 pairs
/// with the k-th at -pi/2 to form one derivative sample (o+ - o-)/2.
/// Consumes 2 * shots composite shots.
std::pair<double, double> parameter_shift_partial(const Problem& problem,
                                                  std::span<const double> theta,
                                                  int index, long long shots,
                                                  Rng& rng);

/// Same pairing with +-delta shifts and divisor 2*delta. Carries an
/// O(delta^2) bias that is not corrected.
std::pair<double, double> finite_difference_partial(
    const Problem& problem, std::span<const double> theta, int index,
    long long shots, const FiniteDifferenceConfig& cfg, Rng& rng);

/// Independent per-component estimation, component i using shots[i].
GradientEstimate estimate_gradient(const Problem& problem,
                                   std::span<const double> theta,
                                   std::span<const long long> shots,
                                   GradMethod method, Rng& rng,
                                   const FiniteDifferenceConfig& cfg = {});

/// Gradient Lipschitz bound of <obs>: half the spectral width when
/// use_spectrum is set, else the sum of |coefficients|. The spectral
/// bound never exceeds the coefficient bound.
double lipschitz_bound(const PauliObservable& obs, bool use_spectrum,
                       int max_qubits = 6);

}  // namespace shotopt

#endif  // SHOTOPT_GRADIENT_HPP
