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

#include "shotopt/sampling.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace shotopt {

std::vector<MeasurementGroup> qwc_groupings(const PauliObservable& obs) {
  std::vector<MeasurementGroup> groups;
  const int n = obs.n_qubits();
  for (int t = 0; t < static_cast<int>(obs.term_count()); ++t) {
    const std::string& word = obs.terms()[static_cast<std::size_t>(t)].word;
    bool placed = false;
    for (auto& group : groups) {
      bool compatible = true;
      for (int q = 0; q < n && compatible; ++q) {
        const char w = word[static_cast<std::size_t>(q)];
        const char b = group.basis[static_cast<std::size_t>(q)];
        if (w != 'I' && b != 'I' && w != b) compatible = false;
      }
      if (compatible) {
        for (int q = 0; q < n; ++q) {
          const char w = word[static_cast<std::size_t>(q)];
          if (w != 'I') group.basis[static_cast<std::size_t>(q)] = w;
        }
        group.term_indices.push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed)
      groups.push_back({word, {t}});
  }
  return groups;
}

std::pair<double, double> mean_and_variance(std::span<const double> outcomes) {
  const std::size_t n = outcomes.size();
  if (n == 0) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : outcomes) sum += x;
  const double mean = sum / static_cast<double>(n);
  if (n == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double x : outcomes) {
    const double d = x - mean;
    ss += d * d;
  }
  return {mean, ss / static_cast<double>(n - 1)};
}

ObservableSampler::ObservableSampler(PauliObservable obs)
    : obs_(std::move(obs)), groups_(qwc_groupings(obs_)) {
  for (const auto& group : groups_) {
    GroupEval ge;
    ge.basis = group.basis;
    for (int t : group.term_indices) {
      const auto& term = obs_.terms()[static_cast<std::size_t>(t)];
      std::uint64_t mask = 0;
      for (int q = 0; q < obs_.n_qubits(); ++q)
        if (term.word[static_cast<std::size_t>(q)] != 'I')
          mask |= std::uint64_t{1} << q;
      ge.terms.push_back({mask, term.coeff});
    }
    evals_.push_back(std::move(ge));
  }
}

namespace {

void rotate_to_basis(StateVector& state, const std::string& basis) {
  for (int q = 0; q < state.n_qubits(); ++q) {
    const char b = basis[static_cast<std::size_t>(q)];
    if (b == 'X') state.apply_h(q);
    else if (b == 'Y') state.apply_y_basis_rotation(q);
  }
}

std::size_t draw_index(const std::vector<double>& cumulative, Rng& rng) {
  const double u = rng.uniform() * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min<std::size_t>(
      static_cast<std::size_t>(it - cumulative.begin()),
      cumulative.size() - 1);
}

std::uint64_t flip_readout(std::uint64_t bits, int n_qubits, double p, Rng& rng) {
  for (int q = 0; q < n_qubits; ++q)
    if (rng.uniform() < p) bits ^= std::uint64_t{1} << q;
  return bits;
}

}  // namespace

void ObservableSampler::sample_outcomes(const AnsatzCircuit& circuit,
                                        std::span<const double> theta,
                                        long long shots,
                                        const NoiseModel& noise, Rng& rng,
                                        std::vector<double>& out) const {
  if (shots < 1) throw std::invalid_argument("sample_outcomes: shots < 1");
  if (circuit.n_qubits != obs_.n_qubits())
    throw std::invalid_argument("sample_outcomes: qubit count mismatch");
  if (theta.size() != static_cast<std::size_t>(circuit.param_count))
    throw std::invalid_argument("sample_outcomes: parameter count mismatch");
  const std::size_t first = out.size();
  out.resize(first + static_cast<std::size_t>(shots));
  const int n = circuit.n_qubits;
  const std::uint64_t key = rng.derive_key();

  auto term_sum = [&](const GroupEval& ge, std::uint64_t bits) {
    double value = 0.0;
    for (const auto& te : ge.terms) {
      const double sign = (std::popcount(bits & te.mask) & 1) ? -1.0 : 1.0;
      value += sign * te.coeff;
    }
    return value;
  };

  if (!noise.enabled) {
    // The circuit is deterministic: prepare each basis-rotated state once
    // and draw all shots from its distribution.
    std::vector<std::vector<double>> cumulatives;
    cumulatives.reserve(evals_.size());
    Rng null_rng(0);
    const StateVector base = apply_circuit(circuit, theta, noise, null_rng);
    std::vector<double> probs;
    for (const auto& ge : evals_) {
      StateVector rotated = base;
      rotate_to_basis(rotated, ge.basis);
      rotated.probabilities(probs);
      std::vector<double> cumulative(probs.size());
      double acc = 0.0;
      for (std::size_t i = 0; i < probs.size(); ++i)
        cumulative[i] = (acc += probs[i]);
      cumulatives.push_back(std::move(cumulative));
    }
    for (long long k = 0; k < shots; ++k) {
      Rng shot_rng = Rng::from_key(key, static_cast<std::uint64_t>(k));
      double value = 0.0;
      for (std::size_t g = 0; g < evals_.size(); ++g) {
        const std::uint64_t bits = draw_index(cumulatives[g], shot_rng);
        value += term_sum(evals_[g], bits);
      }
      out[first + static_cast<std::size_t>(k)] = value;
    }
    return;
  }

  // Noisy path: every (shot, grouping) pair is a fresh trajectory.
  // Indexed child generators make the loop order irrelevant.
#pragma omp parallel for schedule(static) if (shots >= 256)
  for (long long k = 0; k < shots; ++k) {
    Rng shot_rng = Rng::from_key(key, static_cast<std::uint64_t>(k));
    std::vector<double> probs;
    double value = 0.0;
    for (const auto& ge : evals_) {
      StateVector state = apply_circuit(circuit, theta, noise, shot_rng);
      rotate_to_basis(state, ge.basis);
      state.probabilities(probs);
      std::vector<double> cumulative(probs.size());
      double acc = 0.0;
      for (std::size_t i = 0; i < probs.size(); ++i)
        cumulative[i] = (acc += probs[i]);
      std::uint64_t bits = draw_index(cumulative, shot_rng);
      bits = flip_readout(bits, n, noise.readout_flip, shot_rng);
      value += term_sum(ge, bits);
    }
    out[first + static_cast<std::size_t>(k)] = value;
  }
}

SampleResult ObservableSampler::sample_expectation(
    const AnsatzCircuit& circuit, std::span<const double> theta,
    long long shots, const NoiseModel& noise, Rng& rng) const {
  std::vector<double> outcomes;
  outcomes.reserve(static_cast<std::size_t>(shots));
  sample_outcomes(circuit, theta, shots, noise, rng, outcomes);
  const auto [mean, variance] = mean_and_variance(outcomes);
  return {mean, variance, shots, shots * group_count()};
}

SampleResult sample_expectation(const AnsatzCircuit& circuit,
                                std::span<const double> theta,
                                const PauliObservable& obs, long long shots,
                                const NoiseModel& noise, Rng& rng) {
  return ObservableSampler(obs).sample_expectation(circuit, theta, shots,
                                                   noise, rng);
}

}  // namespace shotopt
