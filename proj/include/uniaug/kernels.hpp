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
#ifndef UNIAUG_KERNELS_HPP_
#define UNIAUG_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace uniaug::kernels {

/**
 * Byte-wise point-op kernels. Every implementation of a given entry is
 * bit-exact with the scalar reference; the blend entry evaluates
 * (1-f)*degenerate + f*original in float32 with that exact operation
 * order, then floor(v + 0.5f) clamped to [0, 255].
 */
struct KernelTable {
  const char *name;
  void (*invert)(uint8_t *dst, const uint8_t *src, size_t n);
  // v >= threshold -> 255 - v. threshold is a byte; callers handle 256 as identity.
  void (*solarize)(uint8_t *dst, const uint8_t *src, size_t n, uint8_t threshold);
  void (*posterize)(uint8_t *dst, const uint8_t *src, size_t n, uint8_t mask);
  void (*blend)(uint8_t *dst, const uint8_t *degenerate, const uint8_t *original, size_t n,
                float factor);
};

const KernelTable &scalar_table();

#if defined(UNIAUG_HAVE_AVX2)
const KernelTable &avx2_table();
#endif
#if defined(UNIAUG_HAVE_NEON)
const KernelTable &neon_table();
#endif

bool cpu_has_avx2();

/**
 * The table in use: best available for this CPU unless overridden.
 * UNIAUG_KERNELS=scalar|avx2|neon in the environment (read once) or
 * force() select a specific implementation.
 */
const KernelTable &active();

/// "scalar", "avx2", "neon", or "auto". Throws ConfigError if unavailable.
void force(std::string_view name);

}  // namespace uniaug::kernels

#endif  // UNIAUG_KERNELS_HPP_
