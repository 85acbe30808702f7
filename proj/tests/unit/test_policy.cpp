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
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "uniaug/policy.hpp"

using namespace uniaug;
using uniaug::test::random_image;

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

TEST_CASE("map_magnitude hits endpoints and midpoint") {
  const auto stock = preset(Preset::Default);
  const auto &rot = find(stock, TransformId::Rotate);
  CHECK(map_magnitude(0.0, rot) == -30.0);
  CHECK(map_magnitude(1.0, rot) == 30.0);
  CHECK(map_magnitude(0.5, rot) == 0.0);

  const auto &post = find(stock, TransformId::Posterize);  // [4, 8]
  CHECK(map_magnitude(0.5, post) == 6.0);
  CHECK(map_magnitude(0.0, post) == 4.0);
  CHECK(map_magnitude(1.0, post) == 8.0);
}

TEST_CASE("map_magnitude rounds integer parameters to nearest, ties away") {
  TransformSpec sol{TransformId::Solarize, 0.0, 256.0, false};
  CHECK(map_magnitude(0.5, sol) == 128.0);
  // 0.255859375 * 256 = 65.5 exactly: ties round away from zero.
  CHECK(map_magnitude(65.5 / 256.0, sol) == 66.0);
}

TEST_CASE("map_magnitude rejects binary specs") {
  TransformSpec inv{TransformId::Invert, 0.0, 0.0, true};
  CHECK_THROWS_AS(map_magnitude(0.5, inv), std::invalid_argument);
}

TEST_CASE("map_magnitude endpoints are exact and monotone for every preset spec") {
  RngStream rng(99);
  for (const Preset which : {Preset::Narrow, Preset::Default, Preset::Wide}) {
    for (const auto &spec : preset(which).transforms) {
      if (spec.binary) continue;
      CHECK(map_magnitude(0.0, spec) == spec.lo);
      CHECK(map_magnitude(1.0, spec) == spec.hi);
      double prev = map_magnitude(0.0, spec);
      for (int i = 1; i <= 32; ++i) {
        const double v = map_magnitude(i / 32.0, spec);
        CHECK(v >= prev);
        prev = v;
      }
      (void)rng;
    }
  }
}

TEST_CASE("sample_ops returns exactly num_ops in-domain draws") {
  auto space = preset(Preset::Default);

  SUBCASE("zero ops") {
    space.num_ops = 0;
    RngStream rng(1);
    CHECK(sample_ops(space, rng).empty());
  }

  SUBCASE("contract case with repeatability") {
    space.num_ops = 2;
    RngStream a(123);
    RngStream b(123);
    const auto ops_a = sample_ops(space, a);
    const auto ops_b = sample_ops(space, b);
    REQUIRE(ops_a.size() == 2);
    CHECK(ops_a == ops_b);
    for (const auto &op : ops_a) {
      CHECK(op.transform_index >= 0);
      CHECK(op.transform_index < 15);
      CHECK(op.p >= 0.0);
      CHECK(op.p < 1.0);
      CHECK(op.lambda >= 0.0);
      CHECK(op.lambda < 1.0);
    }
  }
}

TEST_CASE("sample_ops property: random spaces and seeds stay in-domain") {
  RngStream meta(555);
  for (int trial = 0; trial < 200; ++trial) {
    auto space = preset(Preset::Default);
    space.transforms.resize(1 + meta.next_below(15));
    space.num_ops = static_cast<int>(meta.next_below(9));
    RngStream rng(meta.next_u64());
    const auto ops = sample_ops(space, rng);
    CHECK(ops.size() == static_cast<size_t>(space.num_ops));
    for (const auto &op : ops) {
      CHECK(op.transform_index >= 0);
      CHECK(op.transform_index < static_cast<int>(space.transforms.size()));
      CHECK(op.p >= 0.0);
      CHECK(op.p < 1.0);
      CHECK(op.lambda >= 0.0);
      CHECK(op.lambda < 1.0);
    }
  }
}

TEST_CASE("150k single-op draws give near-uniform transform counts") {
  // Binomial concentration: mean 10000, 3 sigma ~ 290.
  auto space = preset(Preset::Default);
  space.num_ops = 1;
  RngStream rng(20260810);
  std::vector<int> counts(15, 0);
  for (int i = 0; i < 150000; ++i) {
    ++counts[static_cast<size_t>(sample_ops(space, rng)[0].transform_index)];
  }
  for (const int c : counts) {
    CHECK(c >= 9700);
    CHECK(c <= 10300);
  }
}

TEST_CASE("apply_chain with no ops is the identity") {
  RngStream img_rng(11);
  const Image img = random_image(img_rng, 8, 8);
  const auto space = preset(Preset::Default);
  RngStream rng(5);
  const auto [out, record] = apply_chain(img, {}, space, rng);
  CHECK(out == img);
  CHECK(record.ops.empty());
  CHECK(record.seed_trace == 5);
}

TEST_CASE("apply_chain skip branch leaves the image untouched") {
  RngStream img_rng(12);
  const Image img = random_image(img_rng, 8, 8);
  const auto space = preset(Preset::Default);
  // p = 0 can never pass the u < p gate since u >= 0.
  const std::vector<SampledOp> ops = {{4 /* Rotate */, 0.0, 0.5}};
  RngStream rng(77);
  const auto [out, record] = apply_chain(img, ops, space, rng);
  CHECK(out == img);
  REQUIRE(record.ops.size() == 1);
  CHECK(!record.ops[0].applied);
  CHECK(!record.ops[0].concrete_param.has_value());
}

TEST_CASE("apply_chain record invariants") {
  const auto space = preset(Preset::Default);
  RngStream meta(31337);
  for (int trial = 0; trial < 50; ++trial) {
    RngStream img_rng(meta.next_u64());
    const Image img = random_image(img_rng, 16, 16);
    RngStream stream(meta.next_u64());
    const auto ops = sample_ops(space, stream);
    const auto [out, record] = apply_chain(img, ops, space, stream);
    CHECK(out.width == img.width);
    CHECK(out.height == img.height);
    REQUIRE(record.ops.size() == static_cast<size_t>(space.num_ops));
    for (const auto &entry : record.ops) {
      const auto &spec = space.transforms[static_cast<size_t>(entry.op.transform_index)];
      CHECK(entry.concrete_param.has_value() == (entry.applied && !spec.binary));
      if (entry.concrete_param) {
        CHECK(*entry.concrete_param >= spec.lo);
        CHECK(*entry.concrete_param <= spec.hi);
      }
    }
  }
}

TEST_CASE("sample plus apply is deterministic end to end") {
  const auto space = preset(Preset::Default);
  RngStream meta(8080);
  for (int trial = 0; trial < 40; ++trial) {
    const uint64_t img_seed = meta.next_u64();
    const uint64_t stream_seed = meta.next_u64();
    RngStream img_rng_a(img_seed);
    RngStream img_rng_b(img_seed);
    const Image img_a = random_image(img_rng_a, 16, 16);
    const Image img_b = random_image(img_rng_b, 16, 16);

    RngStream sa(stream_seed);
    RngStream sb(stream_seed);
    const auto ops_a = sample_ops(space, sa);
    const auto ops_b = sample_ops(space, sb);
    const auto ra = apply_chain(img_a, ops_a, space, sa);
    const auto rb = apply_chain(img_b, ops_b, space, sb);
    CHECK(ra.first == rb.first);
    CHECK(ra.second == rb.second);
  }
}

TEST_CASE("gate applies with empirical rate 1/2") {
  // E[Bernoulli(U)] = 1/2; 3 sigma over 100k trials ~ 0.0047.
  auto space = preset(Preset::Default);
  space.num_ops = 1;
  RngStream img_rng(2);
  const Image img = random_image(img_rng, 4, 4);
  RngStream stream(424242);
  int applied = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    const auto ops = sample_ops(space, stream);
    const auto [out, record] = apply_chain(img, ops, space, stream);
    applied += record.ops[0].applied ? 1 : 0;
  }
  const double rate = static_cast<double>(applied) / trials;
  CHECK(rate >= 0.49);
  CHECK(rate <= 0.51);
}

TEST_CASE("a k-op chain applies k/2 transforms in expectation") {
  // Sum of k independent Bernoulli(U) gates: mean k/2; 3 sigma at 20k
  // chains of 3 ops is ~0.018 on the mean.
  auto space = preset(Preset::Default);
  space.num_ops = 3;
  RngStream img_rng(6);
  const Image img = random_image(img_rng, 4, 4);
  RngStream stream(515151);
  int64_t applied = 0;
  const int chains = 20000;
  for (int i = 0; i < chains; ++i) {
    const auto ops = sample_ops(space, stream);
    const auto [out, record] = apply_chain(img, ops, space, stream);
    int in_chain = 0;
    for (const auto &entry : record.ops) in_chain += entry.applied ? 1 : 0;
    CHECK(in_chain >= 0);
    CHECK(in_chain <= 3);
    applied += in_chain;
  }
  const double mean = static_cast<double>(applied) / chains;
  CHECK(mean > 1.5 - 0.03);
  CHECK(mean < 1.5 + 0.03);
}

TEST_CASE("apply_chain rejects a zero-area image") {
  Image empty;
  const auto space = preset(Preset::Default);
  RngStream rng(1);
  CHECK_THROWS_AS(apply_chain(empty, {}, space, rng), InputError);
}

TEST_CASE("apply_chain rejects out-of-space indices") {
  RngStream img_rng(3);
  const Image img = random_image(img_rng, 4, 4);
  const auto space = preset(Preset::Default);
  RngStream rng(1);
  const std::vector<SampledOp> ops = {{99, 0.5, 0.5}};
  CHECK_THROWS_AS(apply_chain(img, ops, space, rng), std::invalid_argument);
}

TEST_CASE("record JSON lists every op with its mapped parameter") {
  const auto space = preset(Preset::Default);
  RngStream img_rng(4);
  const Image img = random_image(img_rng, 8, 8);
  RngStream stream(99);
  const auto ops = sample_ops(space, stream);
  const auto [out, record] = apply_chain(img, ops, space, stream);
  const auto json = applied_record_to_json(record, space);
  CHECK(json.find("\"seed_trace\"") != std::string::npos);
  CHECK(json.find("\"transform\"") != std::string::npos);
  CHECK(json.find("\"lambda\"") != std::string::npos);
  // One line, no embedded newlines.
  CHECK(json.find('\n') == std::string::npos);
}
