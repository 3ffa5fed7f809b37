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

#ifndef SHOTOPT_OPTIMIZERS_GAIN_HPP
#define SHOTOPT_OPTIMIZERS_GAIN_HPP

namespace shotopt {

/// Expected gain per shot of a descent step along one component:
/// (1/s) * [(alpha - L alpha^2 / 2) g^2 - (L alpha^2 / (2 s)) S].
double expected_gain_per_shot(double alpha, double lipschitz, double g,
                              double S, long long s);

/// Shot count maximizing gain per shot, from the running averages:
/// ceil( (2 L alpha / (2 - L alpha)) * xi / (chi^2 + b mu^k) ).
/// Requires L * alpha < 2. Can legitimately return 0 (for xi = 0);
/// callers floor at their s_min.
long long recommended_shots(double alpha, double lipschitz, double xi,
                            double chi, double bias, double mu, long long k);

/// Largest learning rate keeping the expected gain of a step
/// non-negative: alpha' = chi^2 / (L (chi^2 + xi / s)).
double safe_learning_rate(double lipschitz, double chi, double xi, long long s);

}  // namespace shotopt

#endif  // SHOTOPT_OPTIMIZERS_GAIN_HPP
