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

#include <doctest.h>

#include "shotopt/problems.hpp"
#include "shotopt/spectra.hpp"
#include "support/test_oracles.hpp"

using namespace shotopt;

TEST_CASE("single Z spectrum is {-1, +1}") {
  const auto bounds = eigen_bounds(PauliObservable(1, {{1.0, "Z"}}));
  CHECK(bounds.min == doctest::Approx(-1.0));
  CHECK(bounds.max == doctest::Approx(1.0));
}

TEST_CASE("projector spectrum is {0, 1}") {
  const auto bounds = eigen_bounds(all_zeros_projector(3));
  CHECK(bounds.min == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bounds.max == doctest::Approx(1.0));
}

TEST_CASE("heisenberg triangle ground energy is -6") {
  const auto h = heisenberg_hamiltonian(3, ring_topology(3), 1.0, 3.0);
  CHECK(exact_ground_energy(h) == doctest::Approx(-6.0).epsilon(1e-10));
  // Independent Kronecker-product oracle.
  CHECK(testing::ground_energy_oracle(h) == doctest::Approx(-6.0).epsilon(1e-10));
}

TEST_CASE("dense_matrix agrees with the Kronecker oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PauliTerm> terms;
    const int n = 2 + static_cast<int>(rng.uniform_int(2));
    for (int t = 0; t < 4; ++t) {
      std::string word;
      for (int q = 0; q < n; ++q) word += "IXYZ"[rng.uniform_int(4)];
      terms.push_back({rng.uniform(-2.0, 2.0), word});
    }
    const PauliObservable obs(n, terms);
    const auto flat = dense_matrix(obs);
    const auto oracle = testing::dense_oracle(obs);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        CHECK(std::abs(flat[r * dim + c] -
                       oracle(static_cast<Eigen::Index>(r),
                              static_cast<Eigen::Index>(c))) < 1e-12);
  }
}

TEST_CASE("zero observable has zero spectrum") {
  const auto bounds = eigen_bounds(PauliObservable::zero(2));
  CHECK(bounds.min == 0.0);
  CHECK(bounds.max == 0.0);
}

TEST_CASE("size cap is enforced") {
  PauliObservable big(7, {{1.0, "ZZZZZZZ"}});
  CHECK_THROWS_AS(eigen_bounds(big), std::invalid_argument);
  CHECK_NOTHROW(eigen_bounds(big, 8));
}

TEST_CASE("ground energy examples") {
  // Two sites, J coupling only: singlet at -3.
  const auto h2 = heisenberg_hamiltonian(2, ring_topology(2), 1.0, 0.0);
  CHECK(exact_ground_energy(h2) == doctest::Approx(-3.0));
  // Field only on one qubit.
  const auto field = PauliObservable(1, {{3.0, "Z"}});
  CHECK(exact_ground_energy(field) == doctest::Approx(-3.0));
  // J = B = 0 collapses to the zero observable.
  const auto zero = heisenberg_hamiltonian(3, ring_topology(3), 0.0, 0.0);
  CHECK(zero.term_count() == 0);
  CHECK(exact_ground_energy(zero) == 0.0);
}
