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

#include "shotopt/optimizers/gain.hpp"

#include <cmath>
#include <stdexcept>

namespace shotopt {

double expected_gain_per_shot(double alpha, double lipschitz, double g,
                              double S, long long s) {
  if (s < 1) throw std::invalid_argument("expected_gain_per_shot: s < 1");
  const double sd = static_cast<double>(s);
  const double drift = (alpha - lipschitz * alpha * alpha / 2.0) * g * g;
  const double noise = (lipschitz * alpha * alpha / (2.0 * sd)) * S;
  return (drift - noise) / sd;
}

long long recommended_shots(double alpha, double lipschitz, double xi,
                            double chi, double bias, double mu, long long k) {
  if (!(lipschitz * alpha < 2.0))
    throw std::invalid_argument("recommended_shots: requires L * alpha < 2");
  if (!(bias > 0.0))
    throw std::invalid_argument("recommended_shots: bias must be positive");
  const double factor = 2.0 * lipschitz * alpha / (2.0 - lipschitz * alpha);
  const double denom = chi * chi + bias * std::pow(mu, static_cast<double>(k));
  double raw = std::ceil(factor * xi / denom);
  // Guard the integer cast; callers clip far below this anyway.
  if (!(raw < 1e18)) raw = 1e18;
  if (raw < 0.0) raw = 0.0;
  return static_cast<long long>(raw);
}

double safe_learning_rate(double lipschitz, double chi, double xi, long long s) {
  const double denom = chi * chi + xi / static_cast<double>(s);
  if (denom <= 0.0) return 0.0;  // exactly-zero estimate: no step is safe or needed
  return chi * chi / (lipschitz * denom);
}

}  // namespace shotopt
