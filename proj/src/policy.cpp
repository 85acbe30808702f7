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
#include "uniaug/policy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "uniaug/transforms.hpp"

namespace uniaug {
namespace {

// Solarize/Posterize take ints; keep the conversion defined even when a
// custom config carries a range the kernel will reject anyway.
int param_as_int(double param) {
  return static_cast<int>(std::clamp(param, -1.0e9, 1.0e9));
}

Image apply_transform(const Image &image, const TransformSpec &spec, double param,
                      RngStream &rng) {
  switch (spec.id) {
    case TransformId::ShearX:
      return shear(image, Axis::X, param);
    case TransformId::ShearY:
      return shear(image, Axis::Y, param);
    case TransformId::TranslateX:
      return translate(image, Axis::X, param);
    case TransformId::TranslateY:
      return translate(image, Axis::Y, param);
    case TransformId::Rotate:
      return rotate(image, param);
    case TransformId::AutoContrast:
      return autocontrast(image);
    case TransformId::Invert:
      return invert(image);
    case TransformId::Equalize:
      return equalize(image);
    case TransformId::Solarize:
      return solarize(image, param_as_int(param));
    case TransformId::Posterize:
      return posterize(image, param_as_int(param));
    case TransformId::Contrast:
      return adjust(image, AdjustKind::Contrast, param);
    case TransformId::Color:
      return adjust(image, AdjustKind::Color, param);
    case TransformId::Brightness:
      return adjust(image, AdjustKind::Brightness, param);
    case TransformId::Sharpness:
      return adjust(image, AdjustKind::Sharpness, param);
    case TransformId::Cutout:
      return cutout(image, param, rng);
  }
  throw std::invalid_argument("unknown transform id");
}

}  // namespace

double map_magnitude(double lambda, const TransformSpec &spec) {
  if (spec.binary) {
    throw std::invalid_argument("map_magnitude called on a binary transform");
  }
  const double value = spec.lo + lambda * (spec.hi - spec.lo);
  if (has_integer_param(spec.id)) {
    return std::round(value);  // ties away from zero
  }
  return value;
}

std::vector<SampledOp> sample_ops(const AugmentationSpace &space, RngStream &rng) {
  std::vector<SampledOp> ops;
  ops.reserve(static_cast<size_t>(space.num_ops));
  const auto count = static_cast<uint32_t>(space.transforms.size());
  for (int j = 0; j < space.num_ops; ++j) {
    SampledOp op;
    op.transform_index = static_cast<int>(rng.next_below(count));
    op.p = rng.next_double();
    op.lambda = rng.next_double();
    ops.push_back(op);
  }
  return ops;
}

std::pair<Image, AppliedRecord> apply_chain(const Image &image, const std::vector<SampledOp> &ops,
                                            const AugmentationSpace &space, RngStream &rng) {
  require_nonempty(image);
  AppliedRecord record;
  record.seed_trace = rng.seed();
  record.ops.reserve(ops.size());
  Image current = image;
  for (const auto &op : ops) {
    if (op.transform_index < 0 ||
        op.transform_index >= static_cast<int>(space.transforms.size())) {
      throw std::invalid_argument("sampled op indexes outside the augmentation space");
    }
    const TransformSpec &spec = space.transforms[static_cast<size_t>(op.transform_index)];
    const double gate = rng.next_double();
    const bool applied = gate < op.p;
    AppliedOp entry;
    entry.op = op;
    entry.applied = applied;
    if (applied) {
      if (!spec.binary) {
        entry.concrete_param = map_magnitude(op.lambda, spec);
      }
      current = apply_transform(current, spec, entry.concrete_param.value_or(0.0), rng);
    }
    record.ops.push_back(entry);
  }
  return {std::move(current), std::move(record)};
}

std::string applied_record_to_json(const AppliedRecord &record, const AugmentationSpace &space) {
  nlohmann::ordered_json j;
  char seed_hex[19];
  std::snprintf(seed_hex, sizeof(seed_hex), "0x%016llx",
                static_cast<unsigned long long>(record.seed_trace));
  j["seed_trace"] = seed_hex;
  auto &ops = j["ops"] = nlohmann::ordered_json::array();
  for (const auto &entry : record.ops) {
    nlohmann::ordered_json o;
    const auto idx = static_cast<size_t>(entry.op.transform_index);
    o["transform"] = idx < space.transforms.size()
                         ? std::string(to_string(space.transforms[idx].id))
                         : std::string("?");
    o["transform_index"] = entry.op.transform_index;
    o["p"] = entry.op.p;
    o["lambda"] = entry.op.lambda;
    o["applied"] = entry.applied;
    if (entry.concrete_param) {
      o["param"] = *entry.concrete_param;
    } else {
      o["param"] = nullptr;
    }
    ops.push_back(std::move(o));
  }
  return j.dump();
}

}  // namespace uniaug
