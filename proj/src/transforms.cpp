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
#include "uniaug/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "uniaug/kernels.hpp"

namespace uniaug {
namespace {

void require_finite(double value, const char *what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// Non-negative rounding used by all pixel-value arithmetic. After the
// [0, 255] clamp this matches round-half-away-from-zero everywhere.
inline uint8_t round_clamp_u8(double v) {
  double t = std::floor(v + 0.5);
  if (t < 0.0) t = 0.0;
  if (t > 255.0) t = 255.0;
  return static_cast<uint8_t>(static_cast<int>(t));
}

inline void fetch_tap(const Image &img, long long x, long long y, const uint8_t *&px) {
  px = (x >= 0 && x < img.width && y >= 0 && y < img.height)
           ? img.pixel(static_cast<int>(x), static_cast<int>(y))
           : kFillColor.data();
}

/**
 * Inverse-mapped affine resample: for each destination pixel (x, y) the
 * source position is (a*x + b*y + c, d*x + e*y + f), sampled bilinearly;
 * taps outside the image read kFillColor.
 */
Image warp_bilinear(const Image &img, double a, double b, double c, double d, double e,
                    double f) {
  Image out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double sx = a * x + b * y + c;
      const double sy = d * x + e * y + f;
      // Every tap lands outside (NaN included) whenever the source falls
      // out of (-1, dim); this also keeps the casts below in range.
      if (!(sx > -1.0 && sx < img.width && sy > -1.0 && sy < img.height)) {
        uint8_t *o = out.pixel(x, y);
        o[0] = kFillColor[0];
        o[1] = kFillColor[1];
        o[2] = kFillColor[2];
        continue;
      }
      const double fx0 = std::floor(sx);
      const double fy0 = std::floor(sy);
      const auto x0 = static_cast<long long>(fx0);
      const auto y0 = static_cast<long long>(fy0);
      const double fx = sx - fx0;
      const double fy = sy - fy0;
      const uint8_t *t00, *t01, *t10, *t11;
      fetch_tap(img, x0, y0, t00);
      fetch_tap(img, x0 + 1, y0, t01);
      fetch_tap(img, x0, y0 + 1, t10);
      fetch_tap(img, x0 + 1, y0 + 1, t11);
      const double w00 = (1.0 - fx) * (1.0 - fy);
      const double w01 = fx * (1.0 - fy);
      const double w10 = (1.0 - fx) * fy;
      const double w11 = fx * fy;
      uint8_t *o = out.pixel(x, y);
      for (int ch = 0; ch < 3; ++ch) {
        o[ch] = round_clamp_u8(w00 * t00[ch] + w01 * t01[ch] + w10 * t10[ch] + w11 * t11[ch]);
      }
    }
  }
  return out;
}

using ChannelLut = std::array<std::array<uint8_t, 256>, 3>;

Image apply_channel_luts(const Image &img, const ChannelLut &lut) {
  Image out(img.width, img.height);
  const size_t n = img.pixel_count();
  const uint8_t *src = img.data.data();
  uint8_t *dst = out.data.data();
  for (size_t i = 0; i < n; ++i) {
    dst[0] = lut[0][src[0]];
    dst[1] = lut[1][src[1]];
    dst[2] = lut[2][src[2]];
    src += 3;
    dst += 3;
  }
  return out;
}

// L = round(0.299 R + 0.587 G + 0.114 B), computed in double.
inline int luminance(const uint8_t *px) {
  return static_cast<int>(std::floor(0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2] + 0.5));
}

// 3x3 [[1,1,1],[1,5,1],[1,1,1]]/13 smoothing, replicate-edge borders.
// Exact: ties at .5 cannot occur because 13 is odd.
std::vector<uint8_t> smooth_3x3(const Image &img) {
  std::vector<uint8_t> out(img.data.size());
  const int w = img.width;
  const int h = img.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int sums[3] = {0, 0, 0};
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int sx = std::clamp(x + dx, 0, w - 1);
          const int sy = std::clamp(y + dy, 0, h - 1);
          const int weight = (dx == 0 && dy == 0) ? 5 : 1;
          const uint8_t *px = img.pixel(sx, sy);
          sums[0] += weight * px[0];
          sums[1] += weight * px[1];
          sums[2] += weight * px[2];
        }
      }
      uint8_t *o = out.data() + (static_cast<size_t>(y) * w + x) * 3;
      for (int ch = 0; ch < 3; ++ch) {
        o[ch] = static_cast<uint8_t>((sums[ch] + 6) / 13);
      }
    }
  }
  return out;
}

}  // namespace

Image shear(const Image &image, Axis axis, double factor) {
  require_nonempty(image);
  require_finite(factor, "shear factor");
  const double cx = (image.width - 1) / 2.0;
  const double cy = (image.height - 1) / 2.0;
  if (axis == Axis::X) {
    // src_x = x + factor * (y - cy)
    return warp_bilinear(image, 1.0, factor, -factor * cy, 0.0, 1.0, 0.0);
  }
  // src_y = y + factor * (x - cx)
  return warp_bilinear(image, 1.0, 0.0, 0.0, factor, 1.0, -factor * cx);
}

Image translate(const Image &image, Axis axis, double fraction) {
  require_nonempty(image);
  require_finite(fraction, "translate fraction");
  const double dim = axis == Axis::X ? image.width : image.height;
  // A full-dimension shift already clears the image; clamping keeps the
  // cast defined for arbitrarily large fractions.
  const double rounded = std::clamp(std::round(fraction * dim), -dim, dim);
  const auto shift = static_cast<long long>(rounded);
  Image out(image.width, image.height);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const long long sx = axis == Axis::X ? x - shift : x;
      const long long sy = axis == Axis::Y ? y - shift : y;
      const uint8_t *src;
      fetch_tap(image, sx, sy, src);
      uint8_t *dst = out.pixel(x, y);
      dst[0] = src[0];
      dst[1] = src[1];
      dst[2] = src[2];
    }
  }
  return out;
}

Image rotate(const Image &image, double degrees) {
  require_nonempty(image);
  require_finite(degrees, "rotation angle");
  const double rad = degrees * std::numbers::pi / 180.0;
  const double cosr = std::cos(rad);
  const double sinr = std::sin(rad);
  const double cx = (image.width - 1) / 2.0;
  const double cy = (image.height - 1) / 2.0;
  // src = R(-deg) * (dst - c) + c
  const double a = cosr, b = sinr;
  const double d = -sinr, e = cosr;
  const double c = cx - a * cx - b * cy;
  const double f = cy - d * cx - e * cy;
  return warp_bilinear(image, a, b, c, d, e, f);
}

Image autocontrast(const Image &image) {
  require_nonempty(image);
  ChannelLut lut;
  const size_t n = image.pixel_count();
  for (int ch = 0; ch < 3; ++ch) {
    uint8_t lo = 255;
    uint8_t hi = 0;
    const uint8_t *p = image.data.data() + ch;
    for (size_t i = 0; i < n; ++i, p += 3) {
      lo = std::min(lo, *p);
      hi = std::max(hi, *p);
    }
    if (lo == hi) {
      for (int v = 0; v < 256; ++v) lut[ch][v] = static_cast<uint8_t>(v);
      continue;
    }
    // (v - lo) * 255 is an exact integer, so the single division rounds
    // correctly; a precomputed reciprocal would misplace exact .5 ties.
    for (int v = 0; v < 256; ++v) {
      lut[ch][v] = round_clamp_u8(static_cast<double>((v - lo) * 255) / (hi - lo));
    }
  }
  return apply_channel_luts(image, lut);
}

Image invert(const Image &image) {
  require_nonempty(image);
  Image out(image.width, image.height);
  kernels::active().invert(out.data.data(), image.data.data(), image.data.size());
  return out;
}

Image equalize(const Image &image) {
  require_nonempty(image);
  ChannelLut lut;
  const auto n = static_cast<int64_t>(image.pixel_count());
  for (int ch = 0; ch < 3; ++ch) {
    std::array<int64_t, 256> hist{};
    const uint8_t *p = image.data.data() + ch;
    for (int64_t i = 0; i < n; ++i, p += 3) {
      ++hist[*p];
    }
    int first = 0;
    while (first < 255 && hist[first] == 0) ++first;
    const int64_t m = hist[first];  // cdf at the lowest occupied bin
    if (m == n) {
      // Single occupied bin: constant channel stays put.
      for (int v = 0; v < 256; ++v) lut[ch][v] = static_cast<uint8_t>(v);
      continue;
    }
    int64_t cdf = 0;
    for (int v = 0; v < 256; ++v) {
      cdf += hist[v];
      // (cdf - m) * 255 stays exact below 2^53, so the one division is
      // correctly rounded and .5 ties land where the formula says.
      lut[ch][v] = round_clamp_u8(static_cast<double>((cdf - m) * 255) /
                                  static_cast<double>(n - m));
    }
  }
  return apply_channel_luts(image, lut);
}

Image solarize(const Image &image, int threshold) {
  require_nonempty(image);
  if (threshold < 0 || threshold > 256) {
    throw std::invalid_argument("solarize threshold must be in [0, 256]");
  }
  Image out(image.width, image.height);
  if (threshold == 256) {
    out.data = image.data;
    return out;
  }
  kernels::active().solarize(out.data.data(), image.data.data(), image.data.size(),
                             static_cast<uint8_t>(threshold));
  return out;
}

Image posterize(const Image &image, int bits) {
  require_nonempty(image);
  if (bits < 1 || bits > 8) {
    throw std::invalid_argument("posterize bits must be in [1, 8]");
  }
  const auto mask = static_cast<uint8_t>(0xFF << (8 - bits));
  Image out(image.width, image.height);
  kernels::active().posterize(out.data.data(), image.data.data(), image.data.size(), mask);
  return out;
}

Image adjust(const Image &image, AdjustKind kind, double factor) {
  require_nonempty(image);
  require_finite(factor, "adjust factor");
  if (factor < 0.0) {
    throw std::invalid_argument("adjust factor must be >= 0");
  }
  const size_t bytes = image.data.size();
  const size_t n = image.pixel_count();
  std::vector<uint8_t> degenerate;
  switch (kind) {
    case AdjustKind::Brightness:
      degenerate.assign(bytes, 0);
      break;
    case AdjustKind::Color: {
      degenerate.resize(bytes);
      const uint8_t *src = image.data.data();
      uint8_t *dst = degenerate.data();
      for (size_t i = 0; i < n; ++i, src += 3, dst += 3) {
        const auto l = static_cast<uint8_t>(luminance(src));
        dst[0] = dst[1] = dst[2] = l;
      }
      break;
    }
    case AdjustKind::Contrast: {
      int64_t total = 0;
      const uint8_t *src = image.data.data();
      for (size_t i = 0; i < n; ++i, src += 3) {
        total += luminance(src);
      }
      const auto mean = static_cast<uint8_t>(
          std::floor(static_cast<double>(total) / static_cast<double>(n) + 0.5));
      degenerate.assign(bytes, mean);
      break;
    }
    case AdjustKind::Sharpness:
      degenerate = smooth_3x3(image);
      break;
  }
  Image out(image.width, image.height);
  kernels::active().blend(out.data.data(), degenerate.data(), image.data.data(), bytes,
                          static_cast<float>(factor));
  return out;
}

Image cutout(const Image &image, double fraction, RngStream &rng) {
  require_nonempty(image);
  require_finite(fraction, "cutout fraction");
  const int dim = std::min(image.width, image.height);
  const double rounded =
      std::clamp(std::round(fraction * dim), 0.0, static_cast<double>(dim));
  const auto side = static_cast<long long>(rounded);
  Image out = image;
  if (side <= 0) {
    return out;
  }
  const long long cx = rng.next_below(static_cast<uint32_t>(image.width));
  const long long cy = rng.next_below(static_cast<uint32_t>(image.height));
  const long long x0 = std::max(cx - side / 2, 0LL);
  const long long y0 = std::max(cy - side / 2, 0LL);
  const long long x1 = std::min(cx - side / 2 + side - 1, static_cast<long long>(image.width) - 1);
  const long long y1 =
      std::min(cy - side / 2 + side - 1, static_cast<long long>(image.height) - 1);
  for (long long y = y0; y <= y1; ++y) {
    for (long long x = x0; x <= x1; ++x) {
      uint8_t *px = out.pixel(static_cast<int>(x), static_cast<int>(y));
      px[0] = kFillColor[0];
      px[1] = kFillColor[1];
      px[2] = kFillColor[2];
    }
  }
  return out;
}

}  // namespace uniaug
