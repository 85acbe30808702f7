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

// AArch64 NEON variants, bit-exact with the scalar reference. The blend
// keeps scalar's float32 operation order: separate mul/add (no fused
// multiply-add), floor after +0.5f, clamp, truncating convert.

#include <arm_neon.h>

#include <cmath>

#include "uniaug/kernels.hpp"

namespace uniaug::kernels {
namespace {

void invert_neon(uint8_t *dst, const uint8_t *src, size_t n) {
  const uint8x16_t ff = vdupq_n_u8(0xFF);
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    vst1q_u8(dst + i, veorq_u8(vld1q_u8(src + i), ff));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] ^ 0xFF);
  }
}

void solarize_neon(uint8_t *dst, const uint8_t *src, size_t n, uint8_t threshold) {
  const uint8x16_t thr = vdupq_n_u8(threshold);
  const uint8x16_t ff = vdupq_n_u8(0xFF);
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t v = vld1q_u8(src + i);
    const uint8x16_t ge = vcgeq_u8(v, thr);
    vst1q_u8(dst + i, vbslq_u8(ge, veorq_u8(v, ff), v));
  }
  for (; i < n; ++i) {
    const uint8_t v = src[i];
    dst[i] = v >= threshold ? static_cast<uint8_t>(v ^ 0xFF) : v;
  }
}

void posterize_neon(uint8_t *dst, const uint8_t *src, size_t n, uint8_t mask) {
  const uint8x16_t m = vdupq_n_u8(mask);
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    vst1q_u8(dst + i, vandq_u8(vld1q_u8(src + i), m));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] & mask);
  }
}

void blend_neon(uint8_t *dst, const uint8_t *degenerate, const uint8_t *original, size_t n,
                float factor) {
  const float f = factor;
  const float g = 1.0f - factor;
  const float32x4_t fv = vdupq_n_f32(f);
  const float32x4_t gv = vdupq_n_f32(g);
  const float32x4_t half = vdupq_n_f32(0.5f);
  const float32x4_t zero = vdupq_n_f32(0.0f);
  const float32x4_t hi = vdupq_n_f32(255.0f);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const uint8x8_t d8 = vld1_u8(degenerate + i);
    const uint8x8_t o8 = vld1_u8(original + i);
    const uint16x8_t d16 = vmovl_u8(d8);
    const uint16x8_t o16 = vmovl_u8(o8);
    uint32x4_t out32[2];
    for (int half_idx = 0; half_idx < 2; ++half_idx) {
      const uint32x4_t d32 = half_idx == 0 ? vmovl_u16(vget_low_u16(d16))
                                           : vmovl_u16(vget_high_u16(d16));
      const uint32x4_t o32 = half_idx == 0 ? vmovl_u16(vget_low_u16(o16))
                                           : vmovl_u16(vget_high_u16(o16));
      const float32x4_t df = vcvtq_f32_u32(d32);
      const float32x4_t of = vcvtq_f32_u32(o32);
      float32x4_t v = vaddq_f32(vmulq_f32(gv, df), vmulq_f32(fv, of));
      v = vrndmq_f32(vaddq_f32(v, half));
      v = vminq_f32(vmaxq_f32(v, zero), hi);
      out32[half_idx] = vcvtq_u32_f32(v);
    }
    const uint16x8_t out16 = vcombine_u16(vmovn_u32(out32[0]), vmovn_u32(out32[1]));
    vst1_u8(dst + i, vmovn_u16(out16));
  }
  for (; i < n; ++i) {
    const float v = g * static_cast<float>(degenerate[i]) + f * static_cast<float>(original[i]);
    float t = std::floor(v + 0.5f);
    if (t < 0.0f) t = 0.0f;
    if (t > 255.0f) t = 255.0f;
    dst[i] = static_cast<uint8_t>(static_cast<int>(t));
  }
}

}  // namespace

const KernelTable &neon_table() {
  static const KernelTable table = {
      "neon", &invert_neon, &solarize_neon, &posterize_neon, &blend_neon,
  };
  return table;
}

}  // namespace uniaug::kernels
