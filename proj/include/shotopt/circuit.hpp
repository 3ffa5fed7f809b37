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

#ifndef SHOTOPT_CIRCUIT_HPP
#define SHOTOPT_CIRCUIT_HPP

#include <span>
#include <vector>

#include "shotopt/rng.hpp"
#include "shotopt/statevector.hpp"

namespace shotopt {

/// Stochastic noise proxy: depolarizing-style Pauli insertions per gate
/// plus classical readout bit flips. Each affected qubit independently
/// receives a uniformly random non-identity Pauli with probability p1
/// (after a one-qubit gate) or p2 (after a two-qubit gate, per qubit).
struct NoiseModel {
  double p1 = 0.001;
  double p2 = 0.02;
  double readout_flip = 0.03;
  bool enabled = false;

  static NoiseModel off() { return NoiseModel{}; }
  static NoiseModel default_on() { return NoiseModel{0.001, 0.02, 0.03, true}; }
  void validate() const;
};

enum class GateKind { Entangler, Rotation };
enum class Axis { X, Y, Z };

/// One gate record. Rotations reference a trainable parameter index, or
/// carry a fixed angle when param < 0.
struct Gate {
  GateKind kind = GateKind::Rotation;
  int q0 = 0;
  int q1 = -1;          // second qubit for entanglers
  Axis axis = Axis::Y;  // rotation axis
  int param = -1;       // index into theta, or -1 for a fixed angle
  double fixed_angle = 0.0;
};

/// Layered parameterized gate sequence. Each trainable parameter drives
/// exactly one rotation gate, which is what makes the +-pi/2 shift rule
/// an exact derivative.
struct AnsatzCircuit {
  int n_qubits = 0;
  int depth = 0;
  std::vector<Gate> gates;
  int param_count = 0;

  /// Throws std::invalid_argument on any violated structural invariant.
  void validate() const;
};

/// Hardware-efficient layered ansatz: Ry then Rz on every qubit, then
/// `depth` blocks of a CZ ring followed by Ry/Rz on every qubit.
/// param_count = 2 * n * (depth + 1).
AnsatzCircuit build_ansatz(int n_qubits, int depth, int max_qubits = 10);

/// Circuit computing V(theta_fixed)^dagger U(theta) with a shared gate
/// layout: `base` followed by its reversed, angle-negated copy with the
/// angles frozen at theta_fixed. Trainable parameters are those of the
/// first half only.
AnsatzCircuit append_inverse_fixed(const AnsatzCircuit& base,
                                   std::span<const double> theta_fixed);

/// U(theta)|0...0>. With noise enabled this is a single stochastic
/// trajectory, deterministic given the generator state; with noise
/// disabled the generator is never touched.
StateVector apply_circuit(const AnsatzCircuit& circuit,
                          std::span<const double> theta,
                          const NoiseModel& noise, Rng& rng);

}  // namespace shotopt

#endif  // SHOTOPT_CIRCUIT_HPP
