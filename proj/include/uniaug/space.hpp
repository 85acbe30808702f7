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
#ifndef UNIAUG_SPACE_HPP_
#define UNIAUG_SPACE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniaug/error.hpp"

namespace uniaug {

enum class TransformId {
  ShearX,
  ShearY,
  TranslateX,
  TranslateY,
  Rotate,
  AutoContrast,
  Invert,
  Equalize,
  Solarize,
  Posterize,
  Contrast,
  Color,
  Brightness,
  Sharpness,
  Cutout,
};

inline constexpr int kNumTransformIds = 15;

std::string_view to_string(TransformId id);
std::optional<TransformId> transform_id_from_string(std::string_view name);

/// True for the magnitude-free transforms.
constexpr bool is_binary(TransformId id) {
  return id == TransformId::AutoContrast || id == TransformId::Invert ||
         id == TransformId::Equalize;
}

/// True for transforms whose native parameter is an integer.
constexpr bool has_integer_param(TransformId id) {
  return id == TransformId::Solarize || id == TransformId::Posterize;
}

/// One augmentation operation and its native magnitude range.
/// For binary transforms lo/hi are ignored by every operation.
struct TransformSpec {
  TransformId id = TransformId::ShearX;
  double lo = 0.0;
  double hi = 0.0;
  bool binary = false;

  bool operator==(const TransformSpec &) const = default;
};

/// Ordered transform set plus the chain length drawn per sample.
struct AugmentationSpace {
  std::vector<TransformSpec> transforms;
  int num_ops = 2;

  bool operator==(const AugmentationSpace &) const = default;
};

enum class Preset { Narrow, Default, Wide };

std::string_view to_string(Preset p);
std::optional<Preset> preset_from_string(std::string_view name);

/// The stock 15-transform space under one of the three range presets; num_ops = 2.
AugmentationSpace preset(Preset which);

/// Same, by name ("narrow" | "default" | "wide"). Throws ConfigError otherwise.
AugmentationSpace preset(std::string_view name);

/// Every invariant violation in the space; empty means valid.
std::vector<std::string> validate_space(const AugmentationSpace &space);

/// Parses {"num_ops": N, "transforms": [{"name","low","high","binary"}, ...]}.
/// Throws ConfigError for malformed text, unknown names, or invariant violations.
AugmentationSpace space_from_json(const std::string &json_text);
AugmentationSpace load_space_file(const std::string &path);

/// Inverse of space_from_json. indent < 0 gives the compact single-line form.
std::string space_to_json(const AugmentationSpace &space, int indent = -1);

}  // namespace uniaug

#endif  // UNIAUG_SPACE_HPP_
