/*
 * Copyright 2026 otlab contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OTLAB_RNG_HPP
#define OTLAB_RNG_HPP

#include <cmath>
#include <cstdint>

namespace otlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic random stream (xoshiro256++). All randomness in the library
// flows through Rng so generated files and verification reports are
// byte-identical for a fixed seed, independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x = splitmix64(x);
      word = x;
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (cosine branch only; stateless).
  double normal() {
    const double u = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
  }

  // Uniform integer in [0, k). Modulo bias is irrelevant at the k used here.
  std::uint64_t uniform_int(std::uint64_t k) { return next_u64() % k; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4] = {};
};

// Counter-based per-trial stream derivation: trial i of master seed s draws
// from Rng(splitmix64(s ^ (0x9E3779B97F4A7C15 * (i + 1)))). Independent trials
// can therefore run in any order (or concurrently) with identical results.
inline Rng derive_rng(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(splitmix64(master_seed ^ (0x9E3779B97F4A7C15ull * (index + 1))));
}

}  // namespace otlab

#endif  // OTLAB_RNG_HPP
