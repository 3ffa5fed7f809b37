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

#include "shotopt/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shotopt/spectra.hpp"

namespace shotopt {

std::vector<std::pair<int, int>> ring_topology(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("ring_topology: n_qubits < 1");
  std::vector<std::pair<int, int>> edges;
  if (n_qubits == 2) {
    edges.emplace_back(0, 1);
  } else if (n_qubits >= 3) {
    for (int q = 0; q < n_qubits; ++q) edges.emplace_back(q, (q + 1) % n_qubits);
  }
  return edges;
}

PauliObservable heisenberg_hamiltonian(
    int n_qubits, const std::vector<std::pair<int, int>>& edges, double J,
    double B) {
  std::vector<PauliTerm> terms;
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n_qubits || j < 0 || j >= n_qubits || i == j)
      throw std::invalid_argument("heisenberg_hamiltonian: invalid edge");
    for (char p : {'X', 'Y', 'Z'}) {
      std::string word(static_cast<std::size_t>(n_qubits), 'I');
      word[static_cast<std::size_t>(i)] = p;
      word[static_cast<std::size_t>(j)] = p;
      terms.push_back({J, word});
    }
  }
  for (int q = 0; q < n_qubits; ++q) {
    std::string word(static_cast<std::size_t>(n_qubits), 'I');
    word[static_cast<std::size_t>(q)] = 'Z';
    terms.push_back({B, word});
  }
  return PauliObservable(n_qubits, std::move(terms));
}

namespace {

double observable_lipschitz(const PauliObservable& obs, bool use_spectrum,
                            int n_qubits) {
  // Fall back to the coefficient bound when dense diagonalization is off
  // the table.
  if (use_spectrum && n_qubits <= 6) return lipschitz_bound(obs, true);
  return lipschitz_bound(obs, false);
}

}  // namespace

CircuitObservableProblem::CircuitObservableProblem(AnsatzCircuit circuit,
                                                   PauliObservable obs,
                                                   NoiseModel noise,
                                                   bool use_spectrum_lipschitz)
    : circuit_(std::move(circuit)),
      sampler_(std::move(obs)),
      noise_(noise) {
  circuit_.validate();
  noise_.validate();
  if (circuit_.n_qubits != sampler_.observable().n_qubits())
    throw std::invalid_argument(
        "CircuitObservableProblem: qubit count mismatch");
  lipschitz_ = observable_lipschitz(sampler_.observable(),
                                    use_spectrum_lipschitz, circuit_.n_qubits);
}

void CircuitObservableProblem::sample_cost_outcomes(
    std::span<const double> theta, long long shots, Rng& rng,
    std::vector<double>& out) const {
  sampler_.sample_outcomes(circuit_, theta, shots, noise_, rng, out);
}

double CircuitObservableProblem::exact_cost(std::span<const double> theta) const {
  Rng null_rng(0);
  const StateVector state =
      apply_circuit(circuit_, theta, NoiseModel::off(), null_rng);
  return expectation(state, sampler_.observable());
}

VqeProblem::VqeProblem(int n_qubits, int depth, double J, double B,
                       NoiseModel noise, bool use_spectrum_lipschitz)
    : CircuitObservableProblem(
          build_ansatz(n_qubits, depth),
          heisenberg_hamiltonian(n_qubits, ring_topology(n_qubits), J, B),
          noise, use_spectrum_lipschitz),
      ground_energy_(observable().term_count() == 0
                         ? 0.0
                         : exact_ground_energy(observable())) {}

CompilingProblem::CompilingProblem(int n_qubits, int depth,
                                   std::vector<double> theta_star,
                                   NoiseModel noise,
                                   bool use_spectrum_lipschitz)
    : theta_star_(std::move(theta_star)),
      full_circuit_(append_inverse_fixed(build_ansatz(n_qubits, depth),
                                         theta_star_)),
      sampler_(all_zeros_projector(n_qubits)),
      noise_(noise) {
  noise_.validate();
  // The cost is <1 - P>; the identity offset does not move derivatives,
  // so the projector's spectral width {0, 1} gives the gradient bound.
  lipschitz_ = use_spectrum_lipschitz
                   ? lipschitz_bound(sampler_.observable(), true)
                   : lipschitz_bound(one_minus_all_zeros_projector(n_qubits),
                                     false);
}

CompilingProblem CompilingProblem::random(int n_qubits, int depth,
                                          NoiseModel noise, Rng& rng,
                                          bool use_spectrum_lipschitz) {
  const AnsatzCircuit base = build_ansatz(n_qubits, depth);
  std::vector<double> theta_star(static_cast<std::size_t>(base.param_count));
  for (auto& angle : theta_star) angle = rng.uniform(0.0, 2 * std::numbers::pi);
  return CompilingProblem(n_qubits, depth, std::move(theta_star), noise,
                          use_spectrum_lipschitz);
}

int CompilingProblem::param_count() const { return full_circuit_.param_count; }

void CompilingProblem::sample_cost_outcomes(std::span<const double> theta,
                                            long long shots, Rng& rng,
                                            std::vector<double>& out) const {
  const std::size_t first = out.size();
  sampler_.sample_outcomes(full_circuit_, theta, shots, noise_, rng, out);
  // Projector outcomes are the all-zeros indicator; the cost is its complement.
  for (std::size_t k = first; k < out.size(); ++k) out[k] = 1.0 - out[k];
}

double CompilingProblem::exact_cost(std::span<const double> theta) const {
  Rng null_rng(0);
  const StateVector state =
      apply_circuit(full_circuit_, theta, NoiseModel::off(), null_rng);
  return 1.0 - std::norm(state.amplitude(0));
}

}  // namespace shotopt
