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
#ifndef UNIAUG_TRANSFORMS_HPP_
#define UNIAUG_TRANSFORMS_HPP_

#include "uniaug/image.hpp"
#include "uniaug/rng.hpp"

namespace uniaug {

enum class Axis { X, Y };
enum class AdjustKind { Contrast, Color, Brightness, Sharpness };

/**
 * Pixel kernels. All are pure: the input image is never mutated, output
 * dimensions equal input dimensions, and equal inputs (including stream
 * state for cutout) give bit-identical outputs.
 *
 * Affine kernels (shear, rotate) inverse-map about the pixel-lattice
 * center ((w-1)/2, (h-1)/2) with bilinear sampling; out-of-bounds taps
 * read kFillColor.
 */

/// X: source x = x' + factor * (y' - cy); Y: source y = y' + factor * (x' - cx).
Image shear(const Image &image, Axis axis, double factor);

/// Integer pixel shift by round(fraction * (width for X, height for Y)),
/// ties away from zero. Positive fractions move content toward +x / +y;
/// vacated pixels become kFillColor.
Image translate(const Image &image, Axis axis, double fraction);

Image rotate(const Image &image, double degrees);

/// Per channel: stretch [min, max] to [0, 255]; constant channels unchanged.
Image autocontrast(const Image &image);

/// v -> 255 - v.
Image invert(const Image &image);

/// Per channel: lut(v) = round((cdf(v) - m) * 255 / (N - m)) with m the
/// cdf at the lowest occupied bin; constant channels unchanged.
Image equalize(const Image &image);

/// v >= threshold -> 255 - v. threshold in [0, 256]; 256 is the identity.
Image solarize(const Image &image, int threshold);

/// Keep the top `bits` bits of each channel value, bits in [1, 8].
Image posterize(const Image &image, int bits);

/// clamp(round(degenerate*(1-factor) + original*factor)) per channel, where
/// the degenerate image is: brightness -> black; color -> per-pixel gray at
/// L = round(0.299R + 0.587G + 0.114B); contrast -> constant at the mean of
/// L; sharpness -> 3x3 [[1,1,1],[1,5,1],[1,1,1]]/13 smoothing with
/// replicate-edge borders. factor = 1 is the identity.
Image adjust(const Image &image, AdjustKind kind, double factor);

/// Masks a square of side round(fraction * min(w, h)) centered at a pixel
/// drawn uniformly from the image (x then y), clipped to bounds, with
/// kFillColor. fraction = 0 is the identity and consumes no draws.
Image cutout(const Image &image, double fraction, RngStream &rng);

}  // namespace uniaug

#endif  // UNIAUG_TRANSFORMS_HPP_
