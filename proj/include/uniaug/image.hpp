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
#ifndef UNIAUG_IMAGE_HPP_
#define UNIAUG_IMAGE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "uniaug/error.hpp"

namespace uniaug {

/// Constant fill for out-of-bounds affine samples and cutout interiors.
inline constexpr std::array<uint8_t, 3> kFillColor = {128, 128, 128};

/// 8-bit-per-channel RGB raster, row-major, tightly packed.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;  // size == width * height * 3

  Image() = default;
  Image(int w, int h)
      : width(w), height(h), data(static_cast<size_t>(w) * static_cast<size_t>(h) * 3) {}

  size_t pixel_count() const { return static_cast<size_t>(width) * static_cast<size_t>(height); }

  uint8_t *pixel(int x, int y) {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
  const uint8_t *pixel(int x, int y) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }

  bool operator==(const Image &) const = default;
};

inline void require_nonempty(const Image &img) {
  if (img.width <= 0 || img.height <= 0 || img.data.size() != img.pixel_count() * 3) {
    throw InputError("image has zero area or inconsistent buffer");
  }
}

}  // namespace uniaug

#endif  // UNIAUG_IMAGE_HPP_
