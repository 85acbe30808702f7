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
#include <map>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "uniaug/codec.hpp"
#include "uniaug/kernels.hpp"
#include "uniaug/pipeline.hpp"
#include "uniaug/stats.hpp"

using namespace uniaug;
using uniaug::test::random_image;
using uniaug::test::TempDir;

namespace {

// Writes a small labeled dataset: <root>/<label>/img_<i>.png.
void write_dataset(const std::filesystem::path &root, int per_label, uint64_t seed,
                   const std::vector<std::string> &labels = {"cats", "dogs"}) {
  RngStream rng(seed);
  for (const auto &label : labels) {
    std::filesystem::create_directories(root / label);
    for (int i = 0; i < per_label; ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "img_%03d.png", i);
      save_image(random_image(rng, 16, 16), (root / label / name).string());
    }
  }
}

std::map<std::string, std::vector<uint8_t>> read_tree(const std::filesystem::path &root) {
  std::map<std::string, std::vector<uint8_t>> files;
  for (const auto &entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    files[entry.path().lexically_relative(root).generic_string()] =
        std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  }
  return files;
}

}  // namespace

TEST_CASE("derive_stream is deterministic and input-sensitive") {
  RngStream a = derive_stream(99, 0, 5);
  RngStream b = derive_stream(99, 0, 5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  RngStream c = derive_stream(99, 1, 5);
  RngStream d = derive_stream(99, 0, 6);
  RngStream e = derive_stream(98, 0, 5);
  RngStream base = derive_stream(99, 0, 5);
  const uint64_t first = base.next_u64();
  CHECK(c.next_u64() != first);
  CHECK(d.next_u64() != first);
  CHECK(e.next_u64() != first);
}

TEST_CASE("a million per-image streams have no first-output collisions") {
  std::vector<uint64_t> firsts;
  firsts.reserve(1000000);
  for (int64_t i = 0; i < 1000000; ++i) {
    firsts.push_back(derive_stream(7, 0, i).next_u64());
  }
  std::sort(firsts.begin(), firsts.end());
  CHECK(std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end());
}

TEST_CASE("dataset enumeration sorts byte-wise and labels by subdirectory") {
  TempDir dir;
  write_dataset(dir.path(), 3, 1);
  RngStream loose_rng(2);
  save_image(random_image(loose_rng, 8, 8), (dir.path() / "loose.png").string());
  const auto ref = enumerate_dataset(dir.path());
  REQUIRE(ref.entries.size() == 7);
  CHECK(std::is_sorted(ref.entries.begin(), ref.entries.end(),
                       [](const ImageEntry &a, const ImageEntry &b) {
                         return a.relative_path < b.relative_path;
                       }));
  CHECK(ref.entries[0].relative_path == "cats/img_000.png");
  CHECK(ref.entries[0].label == "cats");
  CHECK(ref.entries.back().relative_path == "loose.png");
  CHECK(!ref.entries.back().label.has_value());
}

TEST_CASE("enumeration rejects missing or imageless roots") {
  TempDir dir;
  CHECK_THROWS_AS(enumerate_dataset(dir.path() / "nope"), InputError);
  std::filesystem::create_directories(dir.path() / "empty");
  std::ofstream(dir.path() / "empty" / "notes.txt") << "hi";
  CHECK_THROWS_AS(enumerate_dataset(dir.path() / "empty"), InputError);
}

TEST_CASE("num_ops = 0 materializes re-encoded copies") {
  TempDir dir;
  write_dataset(dir.path() / "in", 2, 3);
  auto options = AugmentOptions{};
  options.space = preset(Preset::Default);
  options.space.num_ops = 0;
  options.master_seed = 5;
  const auto ref = enumerate_dataset(dir.path() / "in");
  const auto manifest = augment_dataset(ref, dir.path() / "out", options);
  CHECK(manifest.outputs_written == 4);
  CHECK(manifest.failures.empty());
  for (const auto &entry : ref.entries) {
    const Image original = load_image((ref.root / entry.relative_path).string());
    const Image copy = load_image((dir.path() / "out" / "epoch_0" / entry.relative_path).string());
    CHECK(copy == original);
  }
}

TEST_CASE("output trees are byte-identical for any worker count") {
  TempDir dir;
  write_dataset(dir.path() / "in", 6, 11);
  const auto ref = enumerate_dataset(dir.path() / "in");
  AugmentOptions options;
  options.space = preset(Preset::Default);
  options.master_seed = 7;
  options.epochs = 2;
  options.emit_records = true;

  options.workers = 1;
  (void)augment_dataset(ref, dir.path() / "w1", options);
  options.workers = 4;
  (void)augment_dataset(ref, dir.path() / "w4", options);

  const auto tree1 = read_tree(dir.path() / "w1");
  const auto tree4 = read_tree(dir.path() / "w4");
  REQUIRE(!tree1.empty());
  CHECK(tree1 == tree4);  // includes manifest.json and records.jsonl
}

TEST_CASE("output name collisions keep the first entry and record the rest") {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "in");
  RngStream rng(44);
  const Image img = random_image(rng, 10, 10);
  save_image(img, (dir.path() / "in" / "x.png").string());
  // Same stem, different container: re-extension to .png collides.
  {
    std::ifstream src(dir.path() / "in" / "x.png", std::ios::binary);
    std::ofstream dst(dir.path() / "in" / "x.jpeg", std::ios::binary);
    dst << src.rdbuf();  // content irrelevant; the name is what collides
  }
  const auto ref = enumerate_dataset(dir.path() / "in");
  REQUIRE(ref.entries.size() == 2);
  AugmentOptions options;
  options.space = preset(Preset::Default);
  options.space.num_ops = 0;
  const auto manifest = augment_dataset(ref, dir.path() / "out", options);
  CHECK(manifest.outputs_written == 1);
  REQUIRE(manifest.failures.size() == 1);
  CHECK(manifest.failures[0].relative_path == "x.png");  // "x.jpeg" sorts first
  CHECK(manifest.failures[0].error.find("collides") != std::string::npos);
}

TEST_CASE("forced scalar and SIMD kernel paths give identical trees") {
  TempDir dir;
  write_dataset(dir.path() / "in", 4, 15);
  const auto ref = enumerate_dataset(dir.path() / "in");
  AugmentOptions options;
  options.space = preset(Preset::Default);
  options.master_seed = 31;

  kernels::force("scalar");
  (void)augment_dataset(ref, dir.path() / "scalar", options);
  kernels::force("auto");
  (void)augment_dataset(ref, dir.path() / "auto", options);

  const auto a = read_tree(dir.path() / "scalar");
  const auto b = read_tree(dir.path() / "auto");
  REQUIRE(!a.empty());
  CHECK(a == b);
}

TEST_CASE("per-epoch resampling changes the outputs across epochs") {
  TempDir dir;
  write_dataset(dir.path() / "in", 4, 13);
  const auto ref = enumerate_dataset(dir.path() / "in");
  AugmentOptions options;
  options.space = preset(Preset::Default);
  options.master_seed = 21;
  options.epochs = 2;
  (void)augment_dataset(ref, dir.path() / "out", options);
  int differing = 0;
  for (const auto &entry : ref.entries) {
    const Image e0 = load_image((dir.path() / "out" / "epoch_0" / entry.relative_path).string());
    const Image e1 = load_image((dir.path() / "out" / "epoch_1" / entry.relative_path).string());
    differing += e0 == e1 ? 0 : 1;
  }
  CHECK(differing > 0);
}

TEST_CASE("decode failures are recorded and the run continues") {
  TempDir dir;
  write_dataset(dir.path() / "in", 2, 17);
  {
    std::ofstream bad(dir.path() / "in" / "cats" / "broken.png", std::ios::binary);
    bad << "this is not a png";
  }
  const auto ref = enumerate_dataset(dir.path() / "in");
  REQUIRE(ref.entries.size() == 5);
  AugmentOptions options;
  options.space = preset(Preset::Default);
  const auto manifest = augment_dataset(ref, dir.path() / "out", options);
  CHECK(manifest.outputs_written == 4);
  REQUIRE(manifest.failures.size() == 1);
  CHECK(manifest.failures[0].relative_path == "cats/broken.png");
  CHECK(!manifest.failures[0].error.empty());
}

TEST_CASE("augmenting an empty dataset throws") {
  DatasetRef ref;
  AugmentOptions options;
  options.space = preset(Preset::Default);
  CHECK_THROWS_AS(augment_dataset(ref, "/tmp/unused", options), InputError);
}

TEST_CASE("records.jsonl is ordered by (epoch, index) and parses") {
  TempDir dir;
  write_dataset(dir.path() / "in", 3, 19);
  const auto ref = enumerate_dataset(dir.path() / "in");
  AugmentOptions options;
  options.space = preset(Preset::Default);
  options.epochs = 2;
  options.emit_records = true;
  options.workers = 4;
  (void)augment_dataset(ref, dir.path() / "out", options);

  std::ifstream records(dir.path() / "out" / "records.jsonl");
  std::string line;
  int64_t last_key = -1;
  int count = 0;
  while (std::getline(records, line)) {
    const auto j = nlohmann::json::parse(line);
    const int64_t key = j.at("epoch").get<int64_t>() * 1000 + j.at("index").get<int64_t>();
    CHECK(key > last_key);
    last_key = key;
    CHECK(j.at("record").at("ops").size() == 2);
    ++count;
  }
  CHECK(count == 12);
}

TEST_CASE("manifest JSON carries the space and failure list") {
  RunManifest manifest;
  manifest.master_seed = 9;
  manifest.epochs = 3;
  manifest.space = preset(Preset::Narrow);
  manifest.image_count = 10;
  manifest.outputs_written = 29;
  manifest.failures.push_back({2, "a/b.png", "boom"});
  const auto text = manifest_to_json(manifest);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("master_seed") == 9);
  CHECK(j.at("epochs") == 3);
  CHECK(j.at("space").at("transforms").size() == 15);
  CHECK(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("path") == "a/b.png");
  CHECK(j.at("engine_version") == kEngineVersion);
}

TEST_CASE("numops sweep produces one tree and report per value") {
  TempDir dir;
  write_dataset(dir.path() / "in", 3, 23, {"x"});
  const auto ref = enumerate_dataset(dir.path() / "in");
  const auto results =
      numops_sweep(ref, dir.path() / "sweep", preset(Preset::Default), 3, {0, 2});
  REQUIRE(results.size() == 2);
  CHECK(results[0].num_ops == 0);
  // num_ops = 0 re-encodes losslessly: the shift report is exactly zero.
  for (int ch = 0; ch < 3; ++ch) {
    CHECK(results[0].report.mean_delta[ch] == 0.0);
    CHECK(results[0].report.histogram_l1[ch] == 0.0);
  }
  CHECK(results[0].report.fill_fraction_delta == 0.0);
  CHECK(std::filesystem::exists(dir.path() / "sweep" / "numops_0" / "epoch_0" / "x"));
  CHECK(std::filesystem::exists(dir.path() / "sweep" / "numops_2" / "epoch_0" / "x"));
  CHECK(std::filesystem::exists(dir.path() / "sweep" / "shift_reports.json"));
  CHECK_THROWS_AS(numops_sweep(ref, dir.path() / "bad", preset(Preset::Default), 3, {-1}),
                  InputError);
}

TEST_CASE("range ablation produces narrow, default, and wide trees") {
  TempDir dir;
  write_dataset(dir.path() / "in", 2, 29, {"x"});
  const auto ref = enumerate_dataset(dir.path() / "in");
  const auto results = range_ablation(ref, dir.path() / "ablate", 5);
  REQUIRE(results.size() == 3);
  CHECK(results[0].which == Preset::Narrow);
  CHECK(results[2].which == Preset::Wide);
  for (const char *name : {"narrow", "default", "wide"}) {
    CHECK(std::filesystem::exists(dir.path() / "ablate" / name / "epoch_0" / "x"));
  }
}
