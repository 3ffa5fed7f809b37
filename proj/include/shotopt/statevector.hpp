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

#ifndef SHOTOPT_STATEVECTOR_HPP
#define SHOTOPT_STATEVECTOR_HPP

#include <complex>
#include <span>
#include <vector>

#include "shotopt/pauli.hpp"

namespace shotopt {

/// Dense n-qubit state, 2^n complex amplitudes. Qubit q corresponds to
/// bit q of the basis index (qubit 0 is the least significant bit).
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  void apply_rx(int q, double angle);
  void apply_ry(int q, double angle);
  void apply_rz(int q, double angle);
  void apply_cz(int q0, int q1);
  void apply_pauli(int q, char pauli);  // 'X', 'Y' or 'Z'
  void apply_h(int q);
  /// Maps Y-basis measurement onto the computational basis (H after S-dagger).
  void apply_y_basis_rotation(int q);

  /// |amp|^2 per basis state.
  void probabilities(std::vector<double>& out) const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Exact <psi|A|psi>. No sampling noise; this is the "true cost" oracle.
double expectation(const StateVector& state, const PauliObservable& obs);

}  // namespace shotopt

#endif  // SHOTOPT_STATEVECTOR_HPP
