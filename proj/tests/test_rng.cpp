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

#include <algorithm>
#include "shotopt/rng.hpp"

using shotopt::Rng;

TEST_CASE("identical seeds give identical streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  CHECK(equal == 0);
}

TEST_CASE("uniform stays in [0, 1) and covers the interval") {
  Rng rng(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("uniform_int respects the range") {
  Rng rng(9);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 3000; ++i) {
    const auto v = rng.uniform_int(3);
    REQUIRE(v < 3);
    ++counts[v];
  }
  for (int c : counts) CHECK(c > 800);
}

TEST_CASE("indexed children are order-independent") {
  Rng parent1(123), parent2(123);
  const auto key1 = parent1.derive_key();
  const auto key2 = parent2.derive_key();
  Rng c0 = Rng::from_key(key1, 0);
  Rng c5 = Rng::from_key(key1, 5);
  Rng c5_again = Rng::from_key(key2, 5);
  CHECK(c5.next_u64() == c5_again.next_u64());
  CHECK(c0.next_u64() != c5.next_u64());
}

TEST_CASE("split produces an independent stream") {
  Rng parent(55);
  Rng child = parent.split();
  CHECK(child.next_u64() != parent.next_u64());
}
