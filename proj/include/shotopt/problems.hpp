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

#ifndef SHOTOPT_PROBLEMS_HPP
#define SHOTOPT_PROBLEMS_HPP

#include <utility>
#include <vector>

#include "shotopt/circuit.hpp"
#include "shotopt/gradient.hpp"
#include "shotopt/problem.hpp"

namespace shotopt {

/// Nearest-neighbor pairs with wrapped boundary: the triangle for n = 3,
/// a ring for larger n, a single bond for n = 2.
std::vector<std::pair<int, int>> ring_topology(int n_qubits);

/// J * sum_edges (XiXj + YiYj + ZiZj) + B * sum_i Zi, in canonical form.
PauliObservable heisenberg_hamiltonian(int n_qubits,
                                       const std::vector<std::pair<int, int>>& edges,
                                       double J, double B);

/// Expectation of a fixed observable over the layered ansatz. Used
/// directly for the VQE task and as the machinery behind compiling.
class CircuitObservableProblem : public Problem {
 public:
  CircuitObservableProblem(AnsatzCircuit circuit, PauliObservable obs,
                           NoiseModel noise, bool use_spectrum_lipschitz = true);

  int param_count() const override { return circuit_.param_count; }
  int group_count() const override { return sampler_.group_count(); }
  double lipschitz() const override { return lipschitz_; }
  const AnsatzCircuit& circuit() const { return circuit_; }
  const PauliObservable& observable() const { return sampler_.observable(); }
  const NoiseModel& noise() const { return noise_; }

  void sample_cost_outcomes(std::span<const double> theta, long long shots,
                            Rng& rng, std::vector<double>& out) const override;
  double exact_cost(std::span<const double> theta) const override;

 private:
  AnsatzCircuit circuit_;
  ObservableSampler sampler_;
  NoiseModel noise_;
  double lipschitz_;
};

/// VQE for the wrapped Heisenberg model on the layered ansatz.
class VqeProblem : public CircuitObservableProblem {
 public:
  VqeProblem(int n_qubits, int depth, double J, double B, NoiseModel noise,
             bool use_spectrum_lipschitz = true);

  /// Exact ground energy of the Hamiltonian (dense diagonalization).
  double ground_energy() const { return ground_energy_; }

 private:
  double ground_energy_;
};

/// Fixed-input compiling: C(theta) = 1 - |<0|U(theta*)^dag U(theta)|0>|^2.
/// The sampled path measures all qubits in the computational basis and
/// scores the all-zeros outcome.
class CompilingProblem : public Problem {
 public:
  CompilingProblem(int n_qubits, int depth, std::vector<double> theta_star,
                   NoiseModel noise, bool use_spectrum_lipschitz = true);

  /// theta_star drawn uniformly from [0, 2*pi) per component.
  static CompilingProblem random(int n_qubits, int depth, NoiseModel noise,
                                 Rng& rng, bool use_spectrum_lipschitz = true);

  int param_count() const override;
  int group_count() const override { return sampler_.group_count(); }
  double lipschitz() const override { return lipschitz_; }
  const std::vector<double>& theta_star() const { return theta_star_; }
  const AnsatzCircuit& circuit() const { return full_circuit_; }

  void sample_cost_outcomes(std::span<const double> theta, long long shots,
                            Rng& rng, std::vector<double>& out) const override;
  double exact_cost(std::span<const double> theta) const override;

 private:
  std::vector<double> theta_star_;
  AnsatzCircuit full_circuit_;  // U(theta) then U(theta*)^dag, angles frozen
  ObservableSampler sampler_;   // all-zeros projector
  NoiseModel noise_;
  double lipschitz_;
};

}  // namespace shotopt

#endif  // SHOTOPT_PROBLEMS_HPP
