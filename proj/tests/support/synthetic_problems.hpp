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

#ifndef SHOTOPT_TESTS_SUPPORT_SYNTHETIC_PROBLEMS_HPP
#define SHOTOPT_TESTS_SUPPORT_SYNTHETIC_PROBLEMS_HPP

#include <cmath>
#include <functional>

#include "shotopt/problem.hpp"

namespace shotopt::testing {

/// Deterministic cost with zero sampling variance: every "sample" is the
/// exact value. Gives optimizers a zero-variance oracle.
class ExactProblem : public Problem {
 public:
  ExactProblem(int dim, std::function<double(std::span<const double>)> f,
               double lipschitz)
      : dim_(dim), f_(std::move(f)), lipschitz_(lipschitz) {}

  int param_count() const override { return dim_; }
  int group_count() const override { return 1; }
  double lipschitz() const override { return lipschitz_; }

  void sample_cost_outcomes(std::span<const double> theta, long long shots,
                            Rng&, std::vector<double>& out) const override {
    const double value = f_(theta);
    out.insert(out.end(), static_cast<std::size_t>(shots), value);
  }

  double exact_cost(std::span<const double> theta) const override {
    return f_(theta);
  }

 private:
  int dim_;
  std::function<double(std::span<const double>)> f_;
  double lipschitz_;
};

/// sum_i (1 - cos(theta_i)): separable, sinusoidal per coordinate, so the
/// +-pi/2 shift rule is exact. Gradient sin(theta_i), L = 1.
inline ExactProblem separable_cosine_problem(int dim) {
  return ExactProblem(
      dim,
      [](std::span<const double> theta) {
        double total = 0.0;
        for (double t : theta) total += 1.0 - std::cos(t);
        return total;
      },
      1.0);
}

/// Exact cost plus iid uniform noise of the given half-width on every
/// sample; mean is unbiased with variance width^2 / 3.
class NoisyProblem : public Problem {
 public:
  NoisyProblem(int dim, std::function<double(std::span<const double>)> f,
               double lipschitz, double half_width)
      : dim_(dim), f_(std::move(f)), lipschitz_(lipschitz), half_width_(half_width) {}

  int param_count() const override { return dim_; }
  int group_count() const override { return 1; }
  double lipschitz() const override { return lipschitz_; }

  void sample_cost_outcomes(std::span<const double> theta, long long shots,
                            Rng& rng, std::vector<double>& out) const override {
    const double value = f_(theta);
    for (long long k = 0; k < shots; ++k)
      out.push_back(value + rng.uniform(-half_width_, half_width_));
  }

  double exact_cost(std::span<const double> theta) const override {
    return f_(theta);
  }

 private:
  int dim_;
  std::function<double(std::span<const double>)> f_;
  double lipschitz_;
  double half_width_;
};

inline NoisyProblem noisy_cosine_problem(int dim, double half_width) {
  return NoisyProblem(
      dim,
      [](std::span<const double> theta) {
        double total = 0.0;
        for (double t : theta) total += 1.0 - std::cos(t);
        return total;
      },
      1.0, half_width);
}

}  // namespace shotopt::testing

#endif  // SHOTOPT_TESTS_SUPPORT_SYNTHETIC_PROBLEMS_HPP
