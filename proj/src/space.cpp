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
#include "uniaug/space.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace uniaug {
namespace {

struct NameEntry {
  TransformId id;
  std::string_view name;
};

constexpr NameEntry kNames[kNumTransformIds] = {
    {TransformId::ShearX, "ShearX"},
    {TransformId::ShearY, "ShearY"},
    {TransformId::TranslateX, "TranslateX"},
    {TransformId::TranslateY, "TranslateY"},
    {TransformId::Rotate, "Rotate"},
    {TransformId::AutoContrast, "AutoContrast"},
    {TransformId::Invert, "Invert"},
    {TransformId::Equalize, "Equalize"},
    {TransformId::Solarize, "Solarize"},
    {TransformId::Posterize, "Posterize"},
    {TransformId::Contrast, "Contrast"},
    {TransformId::Color, "Color"},
    {TransformId::Brightness, "Brightness"},
    {TransformId::Sharpness, "Sharpness"},
    {TransformId::Cutout, "Cutout"},
};

// Stock magnitude ranges per preset: {narrow lo, hi, default lo, hi, wide lo, hi}.
struct RangeRow {
  TransformId id;
  double r[6];
};

constexpr RangeRow kRanges[kNumTransformIds] = {
    {TransformId::ShearX, {-0.15, 0.15, -0.3, 0.3, -0.9, 0.9}},
    {TransformId::ShearY, {-0.15, 0.15, -0.3, 0.3, -0.9, 0.9}},
    {TransformId::TranslateX, {-0.225, 0.225, -0.45, 0.45, -1.0, 1.0}},
    {TransformId::TranslateY, {-0.225, 0.225, -0.45, 0.45, -1.0, 1.0}},
    {TransformId::Rotate, {-15.0, 15.0, -30.0, 30.0, -90.0, 90.0}},
    {TransformId::AutoContrast, {0, 0, 0, 0, 0, 0}},
    {TransformId::Invert, {0, 0, 0, 0, 0, 0}},
    {TransformId::Equalize, {0, 0, 0, 0, 0, 0}},
    {TransformId::Solarize, {0.0, 256.0, 0.0, 256.0, 0.0, 256.0}},
    {TransformId::Posterize, {6.0, 8.0, 4.0, 8.0, 2.0, 8.0}},
    {TransformId::Contrast, {0.5, 1.5, 0.1, 1.9, 0.01, 2.0}},
    {TransformId::Color, {0.5, 1.5, 0.1, 1.9, 0.01, 2.0}},
    {TransformId::Brightness, {0.5, 1.5, 0.1, 1.9, 0.01, 2.0}},
    {TransformId::Sharpness, {0.5, 1.5, 0.1, 1.9, 0.01, 2.0}},
    {TransformId::Cutout, {0.0, 0.1, 0.0, 0.2, 0.0, 0.6}},
};

}  // namespace

std::string_view to_string(TransformId id) {
  for (const auto &entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

std::optional<TransformId> transform_id_from_string(std::string_view name) {
  for (const auto &entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Narrow:
      return "narrow";
    case Preset::Default:
      return "default";
    case Preset::Wide:
      return "wide";
  }
  return "?";
}

std::optional<Preset> preset_from_string(std::string_view name) {
  if (name == "narrow") return Preset::Narrow;
  if (name == "default") return Preset::Default;
  if (name == "wide") return Preset::Wide;
  return std::nullopt;
}

AugmentationSpace preset(Preset which) {
  const int base = 2 * static_cast<int>(which);
  AugmentationSpace space;
  space.num_ops = 2;
  space.transforms.reserve(kNumTransformIds);
  for (const auto &row : kRanges) {
    TransformSpec spec;
    spec.id = row.id;
    spec.binary = is_binary(row.id);
    if (!spec.binary) {
      spec.lo = row.r[base];
      spec.hi = row.r[base + 1];
    }
    space.transforms.push_back(spec);
  }
  return space;
}

AugmentationSpace preset(std::string_view name) {
  const auto which = preset_from_string(name);
  if (!which) {
    throw ConfigError("unknown preset: " + std::string(name) +
                      " (expected narrow, default, or wide)");
  }
  return preset(*which);
}

std::vector<std::string> validate_space(const AugmentationSpace &space) {
  std::vector<std::string> violations;
  if (space.num_ops < 0) {
    violations.push_back("num_ops must be >= 0");
  }
  std::set<TransformId> seen;
  for (const auto &spec : space.transforms) {
    const std::string name(to_string(spec.id));
    if (!seen.insert(spec.id).second) {
      violations.push_back(name + ": duplicate transform id");
    }
    if (spec.lo > spec.hi) {
      violations.push_back(name + ": lo > hi");
    }
    if (spec.binary != is_binary(spec.id)) {
      violations.push_back(name + (is_binary(spec.id) ? ": must be binary"
                                                      : ": must not be binary"));
    }
  }
  return violations;
}

namespace {

AugmentationSpace space_from_parsed(const nlohmann::json &j) {
  AugmentationSpace space;
  if (!j.is_object() || !j.contains("num_ops") || !j.contains("transforms")) {
    throw ConfigError("space config must be an object with num_ops and transforms");
  }
  space.num_ops = j.at("num_ops").get<int>();
  for (const auto &t : j.at("transforms")) {
    TransformSpec spec;
    const auto name = t.at("name").get<std::string>();
    const auto id = transform_id_from_string(name);
    if (!id) {
      throw ConfigError("unknown transform name: " + name);
    }
    spec.id = *id;
    spec.lo = t.value("low", 0.0);
    spec.hi = t.value("high", 0.0);
    spec.binary = t.value("binary", is_binary(*id));
    space.transforms.push_back(spec);
  }
  const auto violations = validate_space(space);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid augmentation space:";
    for (const auto &v : violations) msg << "\n  - " << v;
    throw ConfigError(msg.str());
  }
  return space;
}

}  // namespace

AugmentationSpace space_from_json(const std::string &json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("space config is not valid JSON: ") + e.what());
  }
  try {
    return space_from_parsed(j);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed space config: ") + e.what());
  }
}

AugmentationSpace load_space_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open space config: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return space_from_json(text.str());
}

std::string space_to_json(const AugmentationSpace &space, int indent) {
  nlohmann::ordered_json j;
  j["num_ops"] = space.num_ops;
  auto &arr = j["transforms"] = nlohmann::ordered_json::array();
  for (const auto &spec : space.transforms) {
    nlohmann::ordered_json t;
    t["name"] = std::string(to_string(spec.id));
    t["low"] = spec.lo;
    t["high"] = spec.hi;
    t["binary"] = spec.binary;
    arr.push_back(std::move(t));
  }
  return j.dump(indent);
}

}  // namespace uniaug
