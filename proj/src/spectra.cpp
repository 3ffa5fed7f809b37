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

#include "shotopt/spectra.hpp"

#include <Eigen/Dense>
#include <bit>
#include <stdexcept>

namespace shotopt {

std::vector<std::complex<double>> dense_matrix(const PauliObservable& obs) {
  const std::size_t dim = std::size_t{1} << obs.n_qubits();
  std::vector<std::complex<double>> matrix(dim * dim, {0.0, 0.0});
  static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& term : obs.terms()) {
    std::size_t flip_mask = 0, sign_mask = 0;
    int y_count = 0;
    for (int q = 0; q < obs.n_qubits(); ++q) {
      const char c = term.word[static_cast<std::size_t>(q)];
      if (c == 'X' || c == 'Y') flip_mask |= std::size_t{1} << q;
      if (c == 'Y' || c == 'Z') sign_mask |= std::size_t{1} << q;
      if (c == 'Y') ++y_count;
    }
    const std::complex<double> prefactor = term.coeff * kIPow[y_count & 3];
    for (std::size_t col = 0; col < dim; ++col) {
      const double sign = (std::popcount(col & sign_mask) & 1) ? -1.0 : 1.0;
      matrix[(col ^ flip_mask) * dim + col] += prefactor * sign;
    }
  }
  return matrix;
}

EigenBounds eigen_bounds(const PauliObservable& obs, int max_qubits) {
  if (obs.n_qubits() > max_qubits)
    throw std::invalid_argument(
        "eigen_bounds: observable too large for dense diagonalization");
  if (obs.term_count() == 0) return {0.0, 0.0};
  const auto flat = dense_matrix(obs);
  const Eigen::Index dim = Eigen::Index{1} << obs.n_qubits();
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = flat[static_cast<std::size_t>(r * dim + c)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_bounds: diagonalization failed");
  const auto& values = solver.eigenvalues();
  return {values(0), values(dim - 1)};
}

double exact_ground_energy(const PauliObservable& obs, int max_qubits) {
  return eigen_bounds(obs, max_qubits).min;
}

}  // namespace shotopt
