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

#ifndef SHOTOPT_SAMPLING_HPP
#define SHOTOPT_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shotopt/circuit.hpp"
#include "shotopt/pauli.hpp"
#include "shotopt/rng.hpp"

namespace shotopt {

/// Result of estimating an expectation value from a finite number of
/// composite shots. One composite shot samples every measurement grouping
/// of the observable once, so circuit_executions = shots * group_count.
struct SampleResult {
  double mean = 0.0;
  double single_shot_variance = 0.0;  // unbiased; 0 by convention at one shot
  long long shots = 0;
  long long circuit_executions = 0;
};

/// Qubit-wise commuting measurement grouping: terms whose per-qubit bases
/// are compatible share one basis-rotated execution.
struct MeasurementGroup {
  std::string basis;               // per-qubit letter; 'I' where unconstrained
  std::vector<int> term_indices;   // into PauliObservable::terms()
};

/// Greedy first-fit grouping in canonical term order.
std::vector<MeasurementGroup> qwc_groupings(const PauliObservable& obs);

/// Mean and unbiased sample variance of `outcomes` (variance 0 for a
/// single outcome).
std::pair<double, double> mean_and_variance(std::span<const double> outcomes);

/// Shot sampler for a fixed observable, with grouping tables precomputed.
class ObservableSampler {
 public:
  explicit ObservableSampler(PauliObservable obs);

  const PauliObservable& observable() const { return obs_; }
  int group_count() const { return static_cast<int>(groups_.size()); }
  const std::vector<MeasurementGroup>& groups() const { return groups_; }

  /// Draws `shots` composite outcomes of the observable on U(theta)|0>.
  /// Each outcome sums coeff * measured eigenvalue over all terms, with
  /// every grouping sampled once. With noise enabled, each shot runs a
  /// fresh stochastic trajectory per grouping and applies readout flips.
  /// Appends to `out`. Deterministic given the generator state.
  void sample_outcomes(const AnsatzCircuit& circuit,
                       std::span<const double> theta, long long shots,
                       const NoiseModel& noise, Rng& rng,
                       std::vector<double>& out) const;

  SampleResult sample_expectation(const AnsatzCircuit& circuit,
                                  std::span<const double> theta,
                                  long long shots, const NoiseModel& noise,
                                  Rng& rng) const;

 private:
  struct TermEval {
    std::uint64_t mask;  // qubits this term reads out
    double coeff;
  };
  struct GroupEval {
    std::string basis;
    std::vector<TermEval> terms;
  };

  PauliObservable obs_;
  std::vector<MeasurementGroup> groups_;
  std::vector<GroupEval> evals_;
};

/// One-off convenience wrapper around ObservableSampler.
SampleResult sample_expectation(const AnsatzCircuit& circuit,
                                std::span<const double> theta,
                                const PauliObservable& obs, long long shots,
                                const NoiseModel& noise, Rng& rng);

}  // namespace shotopt

#endif  // SHOTOPT_SAMPLING_HPP
