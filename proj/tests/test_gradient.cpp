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

#include "shotopt/gradient.hpp"
#include "shotopt/problems.hpp"
#include "support/synthetic_problems.hpp"

using namespace shotopt;
constexpr double kPi = std::numbers::pi;

namespace {

// 1-qubit Rx(theta) measuring Z: f(theta) = cos(theta).
CircuitObservableProblem rx_cosine_problem(NoiseModel noise = NoiseModel::off()) {
  AnsatzCircuit c;
  c.n_qubits = 1;
  c.gates = {{GateKind::Rotation, 0, -1, Axis::X, 0, 0.0}};
  c.param_count = 1;
  return CircuitObservableProblem(c, PauliObservable(1, {{1.0, "Z"}}), noise);
}

}  // namespace

TEST_CASE("analytic shift of cos(theta) at 0 and pi/2") {
  const auto problem = rx_cosine_problem();
  CHECK(problem.exact_cost(std::vector<double>{0.0}) == doctest::Approx(1.0));
  // Extremum: derivative 0.
  CHECK(analytic_partial(problem, std::vector<double>{0.0}, 0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // (cos(pi) - cos(0)) / 2 = -1 at theta = pi/2.
  CHECK(analytic_partial(problem, std::vector<double>{kPi / 2}, 0) ==
        doctest::Approx(-1.0));
}

TEST_CASE("sampled parameter shift is deterministic and pairs shots") {
  const auto problem = rx_cosine_problem();
  Rng r1(4), r2(4);
  const auto [g1, s1] =
      parameter_shift_partial(problem, std::vector<double>{0.9}, 0, 500, r1);
  const auto [g2, s2] =
      parameter_shift_partial(problem, std::vector<double>{0.9}, 0, 500, r2);
  CHECK(g1 == g2);
  CHECK(s1 == s2);
  CHECK(s1 >= 0.0);
}

TEST_CASE("single-sample variance reports zero by convention") {
  const auto problem = rx_cosine_problem();
  Rng rng(8);
  const auto [g, S] =
      parameter_shift_partial(problem, std::vector<double>{0.3}, 0, 1, rng);
  CHECK(S == 0.0);
  CHECK(std::abs(g) <= 1.0);  // one paired +-1 sample: g in {-1, 0, 1}
}

TEST_CASE("finite difference of cosine has the documented bias") {
  // Exact evaluations: central difference of cos at pi/2 with step d
  // equals -sin(d)/d.
  const auto problem = rx_cosine_problem();
  testing::ExactProblem exact(
      1, [&](std::span<const double> t) { return problem.exact_cost(t); }, 1.0);
  Rng rng(0);
  const FiniteDifferenceConfig cfg{0.01};
  const auto [g, S] = finite_difference_partial(
      exact, std::vector<double>{kPi / 2}, 0, 1, cfg, rng);
  CHECK(g == doctest::Approx(-std::sin(0.01) / 0.01).epsilon(1e-12));
  CHECK(g == doctest::Approx(-0.9999833).epsilon(1e-6));
}

TEST_CASE("delta = pi/2 finite difference reproduces the shift rule up to 2/pi") {
  const auto problem = rx_cosine_problem();
  testing::ExactProblem exact(
      1, [&](std::span<const double> t) { return problem.exact_cost(t); }, 1.0);
  Rng rng(0);
  const std::vector<double> theta{0.7};
  const auto [fd, S1] = finite_difference_partial(
      exact, theta, 0, 1, FiniteDifferenceConfig{kPi / 2}, rng);
  const auto [ps, S2] = parameter_shift_partial(exact, theta, 0, 1, rng);
  CHECK(fd == doctest::Approx(ps * (2.0 / kPi)).epsilon(1e-12));
}

TEST_CASE("constant costs have zero derivatives") {
  testing::ExactProblem constant(
      2, [](std::span<const double>) { return 3.5; }, 1.0);
  Rng rng(0);
  const std::vector<double> theta{0.1, 0.2};
  const auto [g, S] = finite_difference_partial(
      constant, theta, 0, 4, FiniteDifferenceConfig{0.2}, rng);
  CHECK(g == 0.0);
  CHECK(S == 0.0);
  const auto est = estimate_gradient(constant, theta,
                                     std::vector<long long>{3, 3},
                                     GradMethod::ParameterShift, rng);
  CHECK(est.g[0] == 0.0);
  CHECK(est.g[1] == 0.0);
  CHECK(est.S[0] == 0.0);
}

TEST_CASE("estimate_gradient accounting: composite shots and executions") {
  const auto h = heisenberg_hamiltonian(3, ring_topology(3), 1.0, 3.0);
  const VqeProblem problem(3, 1, 1.0, 3.0, NoiseModel::off());
  REQUIRE(problem.group_count() == 3);
  std::vector<double> theta(static_cast<std::size_t>(problem.param_count()), 0.5);
  std::vector<long long> shots(theta.size(), 1);
  shots[0] = 3;
  shots[1] = 5;
  Rng rng(12);
  const auto est =
      estimate_gradient(problem, theta, shots, GradMethod::ParameterShift, rng);
  long long total = 0;
  for (long long s : shots) total += s;
  CHECK(est.composite_shots() == 2 * total);
  CHECK(est.executions == 2 * total * problem.group_count());
  // The two-component example: shots (3, 5) alone consume 2 * (3 + 5).
  CHECK(2 * (shots[0] + shots[1]) == 16);
}

TEST_CASE("dimension mismatches are rejected") {
  const auto problem = rx_cosine_problem();
  Rng rng(0);
  std::vector<long long> wrong{1, 1};
  CHECK_THROWS_AS(estimate_gradient(problem, std::vector<double>{0.0}, wrong,
                                    GradMethod::ParameterShift, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parameter_shift_partial(problem, std::vector<double>{0.0}, 0, 0, rng),
      std::invalid_argument);
  CHECK_THROWS_AS(
      finite_difference_partial(problem, std::vector<double>{0.0}, 0, 1,
                                FiniteDifferenceConfig{0.0}, rng),
      std::invalid_argument);
}

TEST_CASE("noiseless estimates track the analytic derivative at high shots") {
  const VqeProblem problem(2, 1, 1.0, 3.0, NoiseModel::off());
  Rng rng(19);
  std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  const long long shots = 10000;
  const auto [g, S] = parameter_shift_partial(problem, theta, 2, shots, rng);
  const double exact = analytic_partial(problem, theta, 2);
  CHECK(std::abs(g - exact) <=
        5.0 * std::sqrt(S / static_cast<double>(shots)) + 1e-9);
}

TEST_CASE("unbiasedness across repeated estimates") {
  const VqeProblem problem(2, 1, 1.0, 3.0, NoiseModel::off());
  Rng rng(29);
  std::vector<double> theta(static_cast<std::size_t>(problem.param_count()));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  const std::vector<long long> shots(theta.size(), 50);
  const int repeats = 200;

  std::vector<double> mean(theta.size(), 0.0), pooled_var(theta.size(), 0.0);
  for (int r = 0; r < repeats; ++r) {
    const auto est =
        estimate_gradient(problem, theta, shots, GradMethod::ParameterShift, rng);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      mean[i] += est.g[i];
      pooled_var[i] += est.S[i];
    }
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    mean[i] /= repeats;
    pooled_var[i] /= repeats;
    const double exact = analytic_partial(problem, theta, static_cast<int>(i));
    const double se = std::sqrt(pooled_var[i] / (50.0 * repeats));
    CHECK(std::abs(mean[i] - exact) < 5.0 * se + 1e-9);
  }
}

TEST_CASE("lipschitz bounds: examples and ordering") {
  const PauliObservable z(1, {{1.0, "Z"}});
  CHECK(lipschitz_bound(z, true) == doctest::Approx(1.0));
  CHECK(lipschitz_bound(all_zeros_projector(3), true) == doctest::Approx(0.5));
  const auto h = heisenberg_hamiltonian(3, ring_topology(3), 1.0, 3.0);
  CHECK(lipschitz_bound(h, false) == 18.0);
  // Spectral bound never exceeds the coefficient bound.
  for (const auto& obs :
       {z, all_zeros_projector(3), h,
        PauliObservable(2, {{0.3, "XY"}, {-1.2, "ZZ"}, {0.4, "IX"}})}) {
    CHECK(lipschitz_bound(obs, true) <= lipschitz_bound(obs, false) + 1e-12);
  }
}

TEST_CASE("gradient differences respect the lipschitz bound") {
  const VqeProblem vqe(3, 2, 1.0, 3.0, NoiseModel::off());
  Rng rng(41);
  const double L = lipschitz_bound(vqe.observable(), true);
  for (int pair = 0; pair < 100; ++pair) {
    std::vector<double> a(static_cast<std::size_t>(vqe.param_count()));
    std::vector<double> b(a.size());
    for (auto& t : a) t = rng.uniform(0.0, 2 * kPi);
    for (auto& t : b) t = rng.uniform(0.0, 2 * kPi);
    const auto ga = analytic_gradient(vqe, a);
    const auto gb = analytic_gradient(vqe, b);
    double diff_sq = 0.0, dist_sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff_sq += (ga[i] - gb[i]) * (ga[i] - gb[i]);
      dist_sq += (a[i] - b[i]) * (a[i] - b[i]);
    }
    CHECK(std::sqrt(diff_sq) <= L * std::sqrt(dist_sq) + 1e-9);
  }
}
