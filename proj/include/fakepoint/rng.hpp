/**
 * Copyright 2026 FakePoint Authors
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

#ifndef FAKEPOINT_RNG_HPP
#define FAKEPOINT_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace fakepoint {

// Stream tags keep independent RNG purposes from colliding on the same seed.
enum : std::uint64_t {
  kStreamSplit = 0x5350u,
  kStreamFold = 0x464Fu,
  kStreamShuffle = 0x5348u,
  kStreamDropout = 0x4452u,
  kStreamInit = 0x494Eu,
  kStreamSmote = 0x534Du,
  kStreamSynth = 0x5359u,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Folds an arbitrary list of values into one well-mixed 64-bit seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t state = 0x8E6B'55A1'C0FF'EE01ull;
  std::uint64_t acc = 0;
  for (std::uint64_t p : parts) {
    state ^= p;
    acc ^= splitmix64(state);
  }
  return acc;
}

// Deterministic draws on top of mt19937_64. The distribution helpers are
// hand-rolled so output does not depend on the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased integer in [0, bound) via Lemire's multiply-shift rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    while (true) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * bound;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= bound || lo >= static_cast<std::uint64_t>(-bound) % bound) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fakepoint

#endif  // FAKEPOINT_RNG_HPP
