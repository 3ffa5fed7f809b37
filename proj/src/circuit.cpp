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

#include "shotopt/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace shotopt {

void NoiseModel::validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(p1) || !in_unit(p2) || !in_unit(readout_flip))
    throw std::invalid_argument("NoiseModel: probabilities must be in [0,1]");
}

void AnsatzCircuit::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("AnsatzCircuit: n_qubits < 1");
  std::vector<int> refs(static_cast<std::size_t>(param_count), 0);
  for (const auto& g : gates) {
    if (g.q0 < 0 || g.q0 >= n_qubits)
      throw std::invalid_argument("AnsatzCircuit: qubit out of range");
    if (g.kind == GateKind::Entangler) {
      if (g.q1 < 0 || g.q1 >= n_qubits || g.q1 == g.q0)
        throw std::invalid_argument("AnsatzCircuit: bad entangler qubits");
    } else {
      if (g.param >= param_count)
        throw std::invalid_argument("AnsatzCircuit: parameter index out of range");
      if (g.param >= 0) ++refs[static_cast<std::size_t>(g.param)];
    }
  }
  for (int count : refs)
    if (count != 1)
      throw std::invalid_argument(
          "AnsatzCircuit: every parameter must drive exactly one rotation");
}

AnsatzCircuit build_ansatz(int n_qubits, int depth, int max_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("build_ansatz: n_qubits < 1");
  if (depth < 0) throw std::invalid_argument("build_ansatz: depth < 0");
  if (n_qubits > max_qubits)
    throw std::invalid_argument("build_ansatz: qubit count exceeds maximum");

  AnsatzCircuit circuit;
  circuit.n_qubits = n_qubits;
  circuit.depth = depth;
  int param = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < n_qubits; ++q) {
      circuit.gates.push_back({GateKind::Rotation, q, -1, Axis::Y, param++, 0.0});
      circuit.gates.push_back({GateKind::Rotation, q, -1, Axis::Z, param++, 0.0});
    }
  };
  rotation_layer();
  for (int d = 0; d < depth; ++d) {
    if (n_qubits == 2) {
      circuit.gates.push_back({GateKind::Entangler, 0, 1, Axis::Z, -1, 0.0});
    } else if (n_qubits >= 3) {
      for (int q = 0; q < n_qubits; ++q)
        circuit.gates.push_back(
            {GateKind::Entangler, q, (q + 1) % n_qubits, Axis::Z, -1, 0.0});
    }
    rotation_layer();
  }
  circuit.param_count = param;
  circuit.validate();
  return circuit;
}

AnsatzCircuit append_inverse_fixed(const AnsatzCircuit& base,
                                   std::span<const double> theta_fixed) {
  if (theta_fixed.size() != static_cast<std::size_t>(base.param_count))
    throw std::invalid_argument("append_inverse_fixed: angle count mismatch");
  AnsatzCircuit out = base;
  for (auto it = base.gates.rbegin(); it != base.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::Rotation) {
      const double angle =
          g.param >= 0 ? theta_fixed[static_cast<std::size_t>(g.param)] : g.fixed_angle;
      g.param = -1;
      g.fixed_angle = -angle;  // rotations invert by negating; CZ is self-inverse
    }
    out.gates.push_back(g);
  }
  out.validate();
  return out;
}

namespace {

inline void maybe_depolarize(StateVector& state, int q, double p, Rng& rng) {
  if (rng.uniform() < p) {
    static const char kPaulis[3] = {'X', 'Y', 'Z'};
    state.apply_pauli(q, kPaulis[rng.uniform_int(3)]);
  }
}

}  // namespace

StateVector apply_circuit(const AnsatzCircuit& circuit,
                          std::span<const double> theta,
                          const NoiseModel& noise, Rng& rng) {
  if (theta.size() != static_cast<std::size_t>(circuit.param_count))
    throw std::invalid_argument("apply_circuit: parameter count mismatch");
  StateVector state(circuit.n_qubits);
  for (const auto& g : circuit.gates) {
    if (g.kind == GateKind::Entangler) {
      state.apply_cz(g.q0, g.q1);
      if (noise.enabled) {
        maybe_depolarize(state, g.q0, noise.p2, rng);
        maybe_depolarize(state, g.q1, noise.p2, rng);
      }
    } else {
      const double angle =
          g.param >= 0 ? theta[static_cast<std::size_t>(g.param)] : g.fixed_angle;
      switch (g.axis) {
        case Axis::X: state.apply_rx(g.q0, angle); break;
        case Axis::Y: state.apply_ry(g.q0, angle); break;
        case Axis::Z: state.apply_rz(g.q0, angle); break;
      }
      if (noise.enabled) maybe_depolarize(state, g.q0, noise.p1, rng);
    }
  }
  return state;
}

}  // namespace shotopt
