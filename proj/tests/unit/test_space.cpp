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
#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "uniaug/space.hpp"

using namespace uniaug;

namespace {

const TransformSpec &find(const AugmentationSpace &space, TransformId id) {
  for (const auto &spec : space.transforms) {
    if (spec.id == id) return spec;
  }
  FAIL("transform missing from space");
  static TransformSpec dummy;
  return dummy;
}

}  // namespace

TEST_CASE("presets carry the stock ranges") {
  const auto narrow = preset(Preset::Narrow);
  const auto stock = preset(Preset::Default);
  const auto wide = preset(Preset::Wide);

  CHECK(stock.num_ops == 2);
  CHECK(stock.transforms.size() == 15);

  CHECK(find(stock, TransformId::Rotate).lo == -30.0);
  CHECK(find(stock, TransformId::Rotate).hi == 30.0);
  CHECK(find(narrow, TransformId::Cutout).lo == 0.0);
  CHECK(find(narrow, TransformId::Cutout).hi == 0.1);
  CHECK(find(wide, TransformId::Posterize).lo == 2.0);
  CHECK(find(wide, TransformId::Posterize).hi == 8.0);

  // Solarize is [0, 256] in every preset.
  for (const auto *space : {&narrow, &stock, &wide}) {
    CHECK(find(*space, TransformId::Solarize).lo == 0.0);
    CHECK(find(*space, TransformId::Solarize).hi == 256.0);
  }

  // The three magnitude-free transforms are binary everywhere.
  for (const auto id : {TransformId::AutoContrast, TransformId::Invert, TransformId::Equalize}) {
    CHECK(find(stock, id).binary);
  }
}

TEST_CASE("preset lookup by name") {
  CHECK(preset("narrow").transforms.size() == 15);
  CHECK(preset("default") == preset(Preset::Default));
  CHECK(preset("wide") == preset(Preset::Wide));
  CHECK_THROWS_AS(preset("widest"), ConfigError);
  CHECK_THROWS_AS(preset(""), ConfigError);
}

TEST_CASE("validate_space accepts the presets") {
  CHECK(validate_space(preset(Preset::Narrow)).empty());
  CHECK(validate_space(preset(Preset::Default)).empty());
  CHECK(validate_space(preset(Preset::Wide)).empty());
}

TEST_CASE("validate_space reports every violation") {
  auto space = preset(Preset::Default);
  auto &rotate = space.transforms[4];
  REQUIRE(rotate.id == TransformId::Rotate);
  rotate.lo = 30.0;
  rotate.hi = -30.0;
  space.transforms.push_back(find(space, TransformId::Invert));  // duplicate
  space.num_ops = -1;

  const auto violations = validate_space(space);
  CHECK(violations.size() == 3);
  const auto contains = [&](const char *needle) {
    return std::any_of(violations.begin(), violations.end(), [&](const std::string &v) {
      return v.find(needle) != std::string::npos;
    });
  };
  CHECK(contains("lo > hi"));
  CHECK(contains("duplicate transform id"));
  CHECK(contains("num_ops"));
}

TEST_CASE("validate_space checks the binary flag both ways") {
  auto space = preset(Preset::Default);
  space.transforms[4].binary = true;   // Rotate must not be binary
  space.transforms[6].binary = false;  // Invert must be binary
  const auto violations = validate_space(space);
  CHECK(violations.size() == 2);
}

TEST_CASE("space JSON round-trips") {
  const auto stock = preset(Preset::Default);
  const auto parsed = space_from_json(space_to_json(stock));
  CHECK(parsed == stock);

  const auto pretty = space_from_json(space_to_json(stock, 2));
  CHECK(pretty == stock);
}

TEST_CASE("space JSON rejects bad input") {
  CHECK_THROWS_AS(space_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(space_from_json("{}"), ConfigError);
  CHECK_THROWS_AS(
      space_from_json(R"({"num_ops":2,"transforms":[{"name":"Rotato","low":0,"high":1}]})"),
      ConfigError);
  // Invariant violations surface as ConfigError on load.
  CHECK_THROWS_AS(
      space_from_json(R"({"num_ops":2,"transforms":[{"name":"Rotate","low":5,"high":-5}]})"),
      ConfigError);
}

TEST_CASE("space file loading") {
  uniaug::test::TempDir dir;
  const auto path = dir.path() / "space.json";
  {
    std::ofstream out(path);
    out << space_to_json(preset(Preset::Wide), 2);
  }
  CHECK(load_space_file(path.string()) == preset(Preset::Wide));
  CHECK_THROWS_AS(load_space_file((dir.path() / "missing.json").string()), ConfigError);
}

TEST_CASE("transform names round-trip") {
  for (int i = 0; i < kNumTransformIds; ++i) {
    const auto id = static_cast<TransformId>(i);
    const auto name = to_string(id);
    REQUIRE(name != "?");
    const auto back = transform_id_from_string(name);
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!transform_id_from_string("NotATransform").has_value());
}
