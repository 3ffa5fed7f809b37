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

#ifndef SHOTOPT_RNG_HPP
#define SHOTOPT_RNG_HPP

#include <cstdint>

namespace shotopt {

/// One step of the splitmix64 sequence. Used for seeding and key mixing.
std::uint64_t splitmix64(std::uint64_t& state);

/// Splittable deterministic PRNG (xoshiro256++ core, splitmix64 seeding).
///
/// Every random draw in the library flows through an instance of this
/// class; there is no global randomness. Streams derived via split() or
/// from_key() are statistically independent of the parent, so work can be
/// fanned out (per run, per shot) without losing reproducibility. All
/// floating-point draws are generated from raw bits, never through
/// std:: distributions, so identical seeds give identical sequences on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }
  /// +1 or -1 with equal probability.
  int plus_minus_one() { return (next_u64() >> 63) ? -1 : +1; }

  /// Independent child stream; advances this generator by one draw.
  Rng split();
  /// Key for deriving a family of child streams via from_key();
  /// advances this generator by one draw.
  std::uint64_t derive_key() { return next_u64(); }
  /// Child stream identified by (key, index). Deterministic and
  /// order-independent, so indexed children can be consumed in parallel.
  static Rng from_key(std::uint64_t key, std::uint64_t index);

 private:
  std::uint64_t s_[4];
};

}  // namespace shotopt

#endif  // SHOTOPT_RNG_HPP
