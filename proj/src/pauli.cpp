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

#include "shotopt/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shotopt {

namespace {
bool valid_letter(char c) {
  return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}
}  // namespace

PauliObservable::PauliObservable(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("PauliObservable: n_qubits < 1");
  for (const auto& t : terms) {
    if (static_cast<int>(t.word.size()) != n_qubits)
      throw std::invalid_argument("PauliObservable: word length != n_qubits");
    for (char c : t.word)
      if (!valid_letter(c))
        throw std::invalid_argument("PauliObservable: invalid Pauli letter");
    if (!std::isfinite(t.coeff))
      throw std::invalid_argument("PauliObservable: non-finite coefficient");
  }
  std::sort(terms.begin(), terms.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().word == t.word) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const PauliTerm& t) { return t.coeff == 0.0; });
}

double PauliObservable::coefficient_norm() const {
  double norm = 0.0;
  for (const auto& t : terms_) norm += std::abs(t.coeff);
  return norm;
}

PauliObservable PauliObservable::subset(const std::vector<int>& term_indices) const {
  std::vector<PauliTerm> picked;
  picked.reserve(term_indices.size());
  for (int i : term_indices) picked.push_back(terms_.at(i));
  return PauliObservable(n_qubits_, std::move(picked));
}

PauliObservable all_zeros_projector(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 20)
    throw std::invalid_argument("all_zeros_projector: bad qubit count");
  const std::size_t count = std::size_t{1} << n_qubits;
  const double coeff = 1.0 / static_cast<double>(count);
  std::vector<PauliTerm> terms;
  terms.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string word(n_qubits, 'I');
    for (int q = 0; q < n_qubits; ++q)
      if (mask & (std::size_t{1} << q)) word[q] = 'Z';
    terms.push_back({coeff, word});
  }
  return PauliObservable(n_qubits, std::move(terms));
}

PauliObservable one_minus_all_zeros_projector(int n_qubits) {
  PauliObservable proj = all_zeros_projector(n_qubits);
  std::vector<PauliTerm> terms = proj.terms();
  for (auto& t : terms) t.coeff = -t.coeff;
  terms.push_back({1.0, std::string(static_cast<std::size_t>(n_qubits), 'I')});
  return PauliObservable(n_qubits, std::move(terms));
}

}  // namespace shotopt
