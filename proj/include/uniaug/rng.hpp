/**
 * Copyright 2026 The uniaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef UNIAUG_RNG_HPP_
#define UNIAUG_RNG_HPP_

#include <array>
#include <cstdint>

namespace uniaug {

/// splitmix64 finalizer; a bijection on 64-bit values.
constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/**
 * Deterministic pseudorandom stream: xoshiro256++ state expanded from a
 * 64-bit seed with splitmix64. Equal seeds give identical draw sequences
 * on every platform. Single-owner: never share a stream between threads.
 */
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : seed_(seed) {
    uint64_t s = seed;
    for (auto &word : state_) {
      s += 0x9E3779B97F4A7C15ULL;
      word = mix64(s);
    }
  }

  /// The 64-bit derivation input this stream was built from.
  uint64_t seed() const { return seed_; }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, bound), bound > 0. Unbiased (multiply-shift with rejection).
  uint32_t next_below(uint32_t bound) {
    uint64_t m = static_cast<uint64_t>(next_u32()) * bound;
    auto low = static_cast<uint32_t>(m);
    if (low < bound) {
      const uint32_t threshold = (0u - bound) % bound;
      while (low < threshold) {
        m = static_cast<uint64_t>(next_u32()) * bound;
        low = static_cast<uint32_t>(m);
      }
    }
    return static_cast<uint32_t>(m >> 32);
  }

 private:
  uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }
  static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> state_{};
  uint64_t seed_ = 0;
};

}  // namespace uniaug

#endif  // UNIAUG_RNG_HPP_
