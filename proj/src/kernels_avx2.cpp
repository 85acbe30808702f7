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

// Compiled with -mavx2 only; callers must check cpu_has_avx2() first.
// Every kernel is bit-exact with its scalar reference: integer ops are
// value-identical by construction and the blend performs the same float32
// operations in the same order (no FMA contraction).

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "uniaug/kernels.hpp"

namespace uniaug::kernels {
namespace {

void invert_avx2(uint8_t *dst, const uint8_t *src, size_t n) {
  const __m256i ff = _mm256_set1_epi8(static_cast<char>(0xFF));
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_xor_si256(v, ff));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] ^ 0xFF);
  }
}

void solarize_avx2(uint8_t *dst, const uint8_t *src, size_t n, uint8_t threshold) {
  const __m256i thr = _mm256_set1_epi8(static_cast<char>(threshold));
  const __m256i ff = _mm256_set1_epi8(static_cast<char>(0xFF));
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
    // v >= thr  <=>  max_epu8(v, thr) == v
    const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, thr), v);
    const __m256i inv = _mm256_xor_si256(v, ff);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_blendv_epi8(v, inv, ge));
  }
  for (; i < n; ++i) {
    const uint8_t v = src[i];
    dst[i] = v >= threshold ? static_cast<uint8_t>(v ^ 0xFF) : v;
  }
}

void posterize_avx2(uint8_t *dst, const uint8_t *src, size_t n, uint8_t mask) {
  const __m256i m = _mm256_set1_epi8(static_cast<char>(mask));
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_and_si256(v, m));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<uint8_t>(src[i] & mask);
  }
}

void blend_avx2(uint8_t *dst, const uint8_t *degenerate, const uint8_t *original, size_t n,
                float factor) {
  const float f = factor;
  const float g = 1.0f - factor;
  const __m256 fv = _mm256_set1_ps(f);
  const __m256 gv = _mm256_set1_ps(g);
  const __m256 half = _mm256_set1_ps(0.5f);
  const __m256 zero = _mm256_setzero_ps();
  const __m256 hi = _mm256_set1_ps(255.0f);
  // Packs eight 0..255 int32 lanes into the low byte of each lane.
  const __m256i pick = _mm256_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                        -1, 0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                        -1, -1);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d32 = _mm256_cvtepu8_epi32(
        _mm_loadl_epi64(reinterpret_cast<const __m128i *>(degenerate + i)));
    const __m256i o32 =
        _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i *>(original + i)));
    const __m256 df = _mm256_cvtepi32_ps(d32);
    const __m256 of = _mm256_cvtepi32_ps(o32);
    __m256 v = _mm256_add_ps(_mm256_mul_ps(gv, df), _mm256_mul_ps(fv, of));
    v = _mm256_floor_ps(_mm256_add_ps(v, half));
    v = _mm256_min_ps(_mm256_max_ps(v, zero), hi);
    const __m256i vi = _mm256_cvttps_epi32(v);
    const __m256i packed = _mm256_shuffle_epi8(vi, pick);
    const uint32_t lo4 = static_cast<uint32_t>(_mm256_extract_epi32(packed, 0));
    const uint32_t hi4 = static_cast<uint32_t>(_mm256_extract_epi32(packed, 4));
    std::memcpy(dst + i, &lo4, 4);
    std::memcpy(dst + i + 4, &hi4, 4);
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

const KernelTable &avx2_table() {
  static const KernelTable table = {
      "avx2", &invert_avx2, &solarize_avx2, &posterize_avx2, &blend_avx2,
  };
  return table;
}

}  // namespace uniaug::kernels
