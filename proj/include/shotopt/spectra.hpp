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

#ifndef SHOTOPT_SPECTRA_HPP
#define SHOTOPT_SPECTRA_HPP

#include <complex>
#include <vector>

#include "shotopt/pauli.hpp"

namespace shotopt {

struct EigenBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Dense 2^n x 2^n matrix of the observable, row-major.
std::vector<std::complex<double>> dense_matrix(const PauliObservable& obs);

/// Exact extreme eigenvalues via dense diagonalization. Rejects
/// observables beyond `max_qubits` qubits.
EigenBounds eigen_bounds(const PauliObservable& obs, int max_qubits = 6);

/// Smallest eigenvalue of the dense matrix of `obs`.
double exact_ground_energy(const PauliObservable& obs, int max_qubits = 6);

}  // namespace shotopt

#endif  // SHOTOPT_SPECTRA_HPP
