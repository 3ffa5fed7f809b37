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

#include "shotopt/sampling.hpp"
#include "support/test_oracles.hpp"

using namespace shotopt;
constexpr double kPi = std::numbers::pi;

namespace {

// Trajectory-averaged expectation of `obs` after the noisy circuit.
double trajectory_average(const AnsatzCircuit& circuit,
                          std::span<const double> theta,
                          const PauliObservable& obs, const NoiseModel& noise,
                          int trajectories, Rng& rng, double* stderr_out) {
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trajectories; ++t) {
    const auto state = apply_circuit(circuit, theta, noise, rng);
    const double value = expectation(state, obs);
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / trajectories;
  const double var = (sum_sq / trajectories - mean * mean) /
                     static_cast<double>(trajectories - 1);
  if (stderr_out) *stderr_out = std::sqrt(std::max(var, 0.0));
  return mean;
}

}  // namespace

TEST_CASE("full depolarization drives Z expectation to zero") {
  const auto circuit = build_ansatz(2, 3);
  Rng rng(31);
  std::vector<double> theta(static_cast<std::size_t>(circuit.param_count));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  NoiseModel noise{1.0, 1.0, 0.0, true};
  const PauliObservable z0(2, {{1.0, "ZI"}});

  testing::DensityOracle oracle(2);
  oracle.run(circuit, theta, noise);
  const double exact_noisy = oracle.expectation(z0);
  CHECK(std::abs(exact_noisy) < 0.05);  // essentially fully mixed

  double se = 0.0;
  const double avg =
      trajectory_average(circuit, theta, z0, noise, 20000, rng, &se);
  CHECK(std::abs(avg - exact_noisy) < 5.0 * se);
  CHECK(std::abs(avg) < 0.05);
}

TEST_CASE("trajectory average matches the exact channel at moderate rates") {
  const auto circuit = build_ansatz(3, 2);
  Rng rng(37);
  std::vector<double> theta(static_cast<std::size_t>(circuit.param_count));
  for (auto& t : theta) t = rng.uniform(0.0, 2 * kPi);
  NoiseModel noise{0.05, 0.1, 0.0, true};
  const PauliObservable obs(3, {{1.0, "ZII"}, {0.5, "IXI"}, {-0.7, "IIZ"}});

  testing::DensityOracle oracle(3);
  oracle.run(circuit, theta, noise);
  const double exact_noisy = oracle.expectation(obs);

  double se = 0.0;
  const double avg =
      trajectory_average(circuit, theta, obs, noise, 20000, rng, &se);
  CHECK(std::abs(avg - exact_noisy) < 5.0 * se + 1e-6);
}

TEST_CASE("noise draws do not touch the generator when disabled") {
  const auto circuit = build_ansatz(2, 1);
  std::vector<double> theta(static_cast<std::size_t>(circuit.param_count), 0.4);
  Rng rng(101);
  (void)apply_circuit(circuit, theta, NoiseModel::off(), rng);
  Rng fresh(101);
  CHECK(rng.next_u64() == fresh.next_u64());
}

TEST_CASE("readout flips bias sampled means the right way") {
  // |0> measured with flip probability p reads <Z> = 1 - 2p on average.
  AnsatzCircuit c;
  c.n_qubits = 1;
  c.gates = {{GateKind::Rotation, 0, -1, Axis::Y, 0, 0.0}};
  c.param_count = 1;
  const std::vector<double> theta{0.0};
  NoiseModel noise{0.0, 0.0, 0.1, true};
  Rng rng(7);
  const auto result = sample_expectation(
      c, theta, PauliObservable(1, {{1.0, "Z"}}), 40000, noise, rng);
  const double expected = 1.0 - 2.0 * noise.readout_flip;
  CHECK(result.mean == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("probabilities stay in range") {
  NoiseModel bad;
  bad.p1 = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
