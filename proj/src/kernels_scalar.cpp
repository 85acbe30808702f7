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
#include <cmath>

#include "uniaug/kernels.hpp"

namespace uniaug::kernels {
namespace {

void invert_scalar(uint8_t *dst, const uint8_t *src, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] ^ 0xFF);
  }
}

void solarize_scalar(uint8_t *dst, const uint8_t *src, size_t n, uint8_t threshold) {
  for (size_t i = 0; i < n; ++i) {
    const uint8_t v = src[i];
    dst[i] = v >= threshold ? static_cast<uint8_t>(v ^ 0xFF) : v;
  }
}

void posterize_scalar(uint8_t *dst, const uint8_t *src, size_t n, uint8_t mask) {
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] & mask);
  }
}

// Reference blend; SIMD variants replay these float32 ops in the same order.
void blend_scalar(uint8_t *dst, const uint8_t *degenerate, const uint8_t *original, size_t n,
                  float factor) {
  const float f = factor;
  const float g = 1.0f - factor;
  for (size_t i = 0; i < n; ++i) {
    const float v = g * static_cast<float>(degenerate[i]) + f * static_cast<float>(original[i]);
    float t = std::floor(v + 0.5f);
    if (t < 0.0f) t = 0.0f;
    if (t > 255.0f) t = 255.0f;
    dst[i] = static_cast<uint8_t>(static_cast<int>(t));
  }
}

}  // namespace

const KernelTable &scalar_table() {
  static const KernelTable table = {
      "scalar", &invert_scalar, &solarize_scalar, &posterize_scalar, &blend_scalar,
  };
  return table;
}

}  // namespace uniaug::kernels
