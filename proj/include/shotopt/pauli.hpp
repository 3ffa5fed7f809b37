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

#ifndef SHOTOPT_PAULI_HPP
#define SHOTOPT_PAULI_HPP

#include <string>
#include <vector>

namespace shotopt {

/// One weighted Pauli word, e.g. 0.5 * "XZI".
struct PauliTerm {
  double coeff = 0.0;
  std::string word;  // length n_qubits over {I, X, Y, Z}; qubit 0 first
};

/// Weighted sum of Pauli words on a fixed number of qubits.
///
/// Held in canonical form: words validated, sorted lexicographically,
/// duplicates merged, exact-zero coefficients dropped. An empty term list
/// is the zero observable.
class PauliObservable {
 public:
  PauliObservable(int n_qubits, std::vector<PauliTerm> terms);

  static PauliObservable zero(int n_qubits) {
    return PauliObservable(n_qubits, {});
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Sum of |coeff| over all terms.
  double coefficient_norm() const;

  /// Observable consisting of the given subset of this one's terms.
  PauliObservable subset(const std::vector<int>& term_indices) const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Projector onto |0...0>, expanded as 2^n Pauli words over {I, Z} with
/// coefficient 2^-n each.
PauliObservable all_zeros_projector(int n_qubits);

/// Cost observable of the fixed-input compiling task: identity minus the
/// all-zeros projector, so that <A> = 1 - p(all zeros).
PauliObservable one_minus_all_zeros_projector(int n_qubits);

}  // namespace shotopt

#endif  // SHOTOPT_PAULI_HPP
