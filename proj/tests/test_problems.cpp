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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shotopt/problems.hpp"
#include "shotopt/spectra.hpp"

using namespace shotopt;
constexpr double kPi = std::numbers::pi;

TEST_CASE("heisenberg triangle: terms, norm, edge validation") {
  const auto h = heisenberg_hamiltonian(3, ring_topology(3), 1.0, 3.0);
  CHECK(h.term_count() == 12);  // 9 couplings + 3 fields
  CHECK(h.coefficient_norm() == 18.0);
  CHECK_THROWS_AS(heisenberg_hamiltonian(2, {{0, 5}}, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("topologies: bond, triangle, ring") {
  CHECK(ring_topology(1).empty());
  CHECK(ring_topology(2).size() == 1);
  CHECK(ring_topology(3).size() == 3);
  CHECK(ring_topology(5).size() == 5);
}

TEST_CASE("ground energy is invariant under relabeling the triangle") {
  const std::vector<std::vector<std::pair<int, int>>> labelings{
      {{0, 1}, {1, 2}, {2, 0}},
      {{1, 0}, {2, 1}, {0, 2}},
      {{2, 0}, {0, 1}, {1, 2}}};
  for (const auto& edges : labelings) {
    const auto h = heisenberg_hamiltonian(3, edges, 1.0, 3.0);
    CHECK(exact_ground_energy(h) == doctest::Approx(-6.0).epsilon(1e-10));
  }
}

TEST_CASE("compiling cost vanishes at theta* and stays in [0, 1]") {
  Rng rng(51);
  const auto problem = CompilingProblem::random(3, 6, NoiseModel::off(), rng);
  CHECK(problem.exact_cost(problem.theta_star()) ==
        doctest::Approx(0.0).epsilon(1e-10));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
    const double cost = problem.exact_cost(theta);
    CHECK(cost >= 0.0);
    CHECK(cost <= 1.0);
  }
}

TEST_CASE("compiling lipschitz constants") {
  Rng rng(3);
  const auto spectral = CompilingProblem::random(3, 2, NoiseModel::off(), rng, true);
  CHECK(spectral.lipschitz() == doctest::Approx(0.5));
  Rng rng2(3);
  const auto coeff = CompilingProblem::random(3, 2, NoiseModel::off(), rng2, false);
  CHECK(coeff.lipschitz() == doctest::Approx(2.0 - std::pow(2.0, -2)));  // 2 - 2^(1-n)
}

TEST_CASE("random-pair compiling cost approaches 1 - 2^-n on average") {
  Rng rng(61);
  const int n = 3;
  double sum = 0.0;
  const int pairs = 2000;
  for (int p = 0; p < pairs; ++p) {
    const auto problem = CompilingProblem::random(n, 2, NoiseModel::off(), rng);
    std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
    sum += problem.exact_cost(theta);
  }
  const double mean = sum / pairs;
  CHECK(mean == doctest::Approx(1.0 - std::pow(2.0, -n)).epsilon(0.05));
}

TEST_CASE("sampled compiling cost is a bernoulli complement") {
  Rng rng(71);
  const auto problem = CompilingProblem::random(2, 1, NoiseModel::off(), rng);
  std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  const double exact = problem.exact_cost(theta);
  const auto sampled = problem.sample_cost(theta, 20000, rng);
  const double p = 1.0 - exact;  // all-zeros probability
  CHECK(sampled.mean == doctest::Approx(exact).epsilon(0.05));
  CHECK(sampled.single_shot_variance == doctest::Approx(p * (1 - p)).epsilon(0.1));
  // One grouping: executions equal shots.
  CHECK(sampled.circuit_executions == sampled.shots);
}

TEST_CASE("vqe energy bounds and estimator consistency") {
  const VqeProblem problem(3, 2, 1.0, 3.0, NoiseModel::off());
  CHECK(problem.ground_energy() == doctest::Approx(-6.0).epsilon(1e-10));
  const auto bounds = eigen_bounds(problem.observable());
  Rng rng(81);
  std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  const double exact = problem.exact_cost(theta);
  CHECK(exact >= bounds.min - 1e-12);
  CHECK(exact <= bounds.max + 1e-12);

  const long long shots = 100000;
  const auto sampled = problem.sample_cost(theta, shots, rng);
  const double se = std::sqrt(sampled.single_shot_variance /
                              static_cast<double>(shots));
  CHECK(std::abs(sampled.mean - exact) < 5.0 * se);
}

TEST_CASE("vqe exact cost at zero angles is seed independent") {
  const VqeProblem problem(3, 6, 1.0, 3.0, NoiseModel::off());
  const std::vector<double> zeros(static_cast<std::size_t>(problem.param_count()), 0.0);
  const double a = problem.exact_cost(zeros);
  const double b = problem.exact_cost(zeros);
  CHECK(a == b);
  // |000> under CZ rings stays |000>: energy = 3 * B + 3 * J <ZZ> = 9 + 3.
  CHECK(a == doctest::Approx(12.0));
}

TEST_CASE("vqe lipschitz: spectral vs coefficient bound") {
  const VqeProblem spectral(3, 1, 1.0, 3.0, NoiseModel::off(), true);
  CHECK(spectral.lipschitz() == doctest::Approx(9.0));  // (12 - (-6)) / 2
  const VqeProblem coeff(3, 1, 1.0, 3.0, NoiseModel::off(), false);
  CHECK(coeff.lipschitz() == 18.0);
}

TEST_CASE("theta_star dimension mismatch is rejected") {
  CHECK_THROWS_AS(CompilingProblem(2, 1, {0.1, 0.2}, NoiseModel::off()),
                  std::invalid_argument);
}
