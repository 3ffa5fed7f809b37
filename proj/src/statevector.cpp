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

#include "shotopt/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace shotopt {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

inline void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
}

// Applies `kernel(a0, a1)` to every amplitude pair split by qubit q.
template <typename Kernel>
inline void pair_loop(std::vector<std::complex<double>>& amps, int q,
                      Kernel&& kernel) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * bit)
    for (std::size_t off = 0; off < bit; ++off) {
      const std::size_t i0 = base + off;
      kernel(amps[i0], amps[i0 | bit]);
    }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 24)
    throw std::invalid_argument("StateVector: unsupported qubit count");
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::apply_rx(int q, double angle) {
  check_qubit(q, n_qubits_);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  pair_loop(amps_, q, [&](auto& a0, auto& a1) {
    const auto t0 = a0, t1 = a1;
    a0 = c * t0 - kImag * s * t1;
    a1 = -kImag * s * t0 + c * t1;
  });
}

void StateVector::apply_ry(int q, double angle) {
  check_qubit(q, n_qubits_);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  pair_loop(amps_, q, [&](auto& a0, auto& a1) {
    const auto t0 = a0, t1 = a1;
    a0 = c * t0 - s * t1;
    a1 = s * t0 + c * t1;
  });
}

void StateVector::apply_rz(int q, double angle) {
  check_qubit(q, n_qubits_);
  const std::complex<double> p0{std::cos(angle / 2), -std::sin(angle / 2)};
  const std::complex<double> p1 = std::conj(p0);
  pair_loop(amps_, q, [&](auto& a0, auto& a1) {
    a0 *= p0;
    a1 *= p1;
  });
}

void StateVector::apply_cz(int q0, int q1) {
  check_qubit(q0, n_qubits_);
  check_qubit(q1, n_qubits_);
  if (q0 == q1) throw std::invalid_argument("apply_cz: identical qubits");
  const std::size_t mask = (std::size_t{1} << q0) | (std::size_t{1} << q1);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & mask) == mask) amps_[i] = -amps_[i];
}

void StateVector::apply_pauli(int q, char pauli) {
  check_qubit(q, n_qubits_);
  switch (pauli) {
    case 'X':
      pair_loop(amps_, q, [](auto& a0, auto& a1) { std::swap(a0, a1); });
      break;
    case 'Y':
      pair_loop(amps_, q, [](auto& a0, auto& a1) {
        const auto t0 = a0;
        a0 = -kImag * a1;
        a1 = kImag * t0;
      });
      break;
    case 'Z':
      pair_loop(amps_, q, [](auto&, auto& a1) { a1 = -a1; });
      break;
    default:
      throw std::invalid_argument("apply_pauli: letter must be X, Y or Z");
  }
}

void StateVector::apply_h(int q) {
  check_qubit(q, n_qubits_);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  pair_loop(amps_, q, [&](auto& a0, auto& a1) {
    const auto t0 = a0, t1 = a1;
    a0 = inv_sqrt2 * (t0 + t1);
    a1 = inv_sqrt2 * (t0 - t1);
  });
}

void StateVector::apply_y_basis_rotation(int q) {
  check_qubit(q, n_qubits_);
  // H * Sdg: conjugates Z into Y, so a Z-basis sample reads out Y.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  pair_loop(amps_, q, [&](auto& a0, auto& a1) {
    const auto t0 = a0, t1 = a1;
    a0 = inv_sqrt2 * (t0 - kImag * t1);
    a1 = inv_sqrt2 * (t0 + kImag * t1);
  });
}

void StateVector::probabilities(std::vector<double>& out) const {
  out.resize(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::norm(amps_[i]);
}

double expectation(const StateVector& state, const PauliObservable& obs) {
  if (obs.n_qubits() != state.n_qubits())
    throw std::invalid_argument("expectation: qubit count mismatch");
  const auto amps = state.amplitudes();
  std::complex<double> total{0.0, 0.0};
  for (const auto& term : obs.terms()) {
    std::size_t flip_mask = 0, sign_mask = 0;
    int y_count = 0;
    for (int q = 0; q < obs.n_qubits(); ++q) {
      const char c = term.word[static_cast<std::size_t>(q)];
      if (c == 'X' || c == 'Y') flip_mask |= std::size_t{1} << q;
      if (c == 'Y' || c == 'Z') sign_mask |= std::size_t{1} << q;
      if (c == 'Y') ++y_count;
    }
    // word|j> = i^y_count * (-1)^popcount(j & sign_mask) |j ^ flip_mask>
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < amps.size(); ++j) {
      const double sign = (std::popcount(j & sign_mask) & 1) ? -1.0 : 1.0;
      sum += sign * std::conj(amps[j ^ flip_mask]) * amps[j];
    }
    static const std::complex<double> kIPow[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    total += term.coeff * kIPow[y_count & 3] * sum;
  }
  return total.real();
}

}  // namespace shotopt
