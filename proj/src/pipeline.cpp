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
#include "uniaug/pipeline.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "parallel.hpp"
#include "uniaug/codec.hpp"
#include "uniaug/policy.hpp"

namespace uniaug {

RngStream derive_stream(uint64_t master_seed, int epoch, int64_t image_index) {
  uint64_t s = mix64(master_seed);
  s = mix64(s ^ (0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(epoch)));
  s = mix64(s ^ (0xC2B2AE3D27D4EB4FULL + static_cast<uint64_t>(image_index)));
  return RngStream(s);
}

std::string manifest_to_json(const RunManifest &manifest) {
  nlohmann::ordered_json j;
  j["engine_version"] = manifest.engine_version;
  j["master_seed"] = manifest.master_seed;
  j["epochs"] = manifest.epochs;
  j["space"] = nlohmann::ordered_json::parse(space_to_json(manifest.space));
  j["image_count"] = manifest.image_count;
  j["outputs_written"] = manifest.outputs_written;
  auto &failures = j["failures"] = nlohmann::ordered_json::array();
  for (const auto &failure : manifest.failures) {
    failures.push_back({{"epoch", failure.epoch},
                        {"path", failure.relative_path},
                        {"error", failure.error}});
  }
  j["records_emitted"] = manifest.records_emitted;
  return j.dump(2) + "\n";
}

namespace {

std::filesystem::path output_relpath(const std::string &relative_path) {
  std::filesystem::path p(relative_path);
  p.replace_extension(".png");
  return p;
}

struct TaskResult {
  bool ok = false;
  std::string error;
  std::string record_json;
};

}  // namespace

RunManifest augment_dataset(const DatasetRef &input, const std::filesystem::path &output_root,
                            const AugmentOptions &options) {
  namespace fs = std::filesystem;
  if (input.entries.empty()) {
    throw InputError("cannot augment an empty dataset");
  }
  {
    const auto violations = validate_space(options.space);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "invalid augmentation space:";
      for (const auto &v : violations) msg << "\n  - " << v;
      throw ConfigError(msg.str());
    }
  }
  if (options.epochs < 1) {
    throw InputError("epochs must be >= 1");
  }

  const auto n_images = static_cast<int64_t>(input.entries.size());
  const int epochs = options.epochs;

  // Output names drop the container extension for .png. Two entries that
  // collide after re-extension keep only the first (sort order); the rest
  // are reported as failures up front.
  std::vector<fs::path> out_rel(input.entries.size());
  std::vector<bool> skip(input.entries.size(), false);
  std::vector<FileFailure> name_failures;
  {
    std::set<std::string> seen;
    for (size_t i = 0; i < input.entries.size(); ++i) {
      out_rel[i] = output_relpath(input.entries[i].relative_path);
      if (!seen.insert(out_rel[i].generic_string()).second) {
        skip[i] = true;
        for (int e = 0; e < epochs; ++e) {
          name_failures.push_back(
              {e, input.entries[i].relative_path, "output name collides with an earlier entry"});
        }
      }
    }
  }

  // Directories are created up front so workers never race on mkdir.
  for (int e = 0; e < epochs; ++e) {
    const fs::path epoch_root = output_root / ("epoch_" + std::to_string(e));
    fs::create_directories(epoch_root);
    for (size_t i = 0; i < out_rel.size(); ++i) {
      if (skip[i]) continue;
      const fs::path parent = (epoch_root / out_rel[i]).parent_path();
      if (!parent.empty()) {
        fs::create_directories(parent);
      }
    }
  }

  const int64_t total = n_images * epochs;
  std::vector<TaskResult> results(static_cast<size_t>(total));

  parallel_for(total, options.workers, [&](int64_t task) {
    const int epoch = static_cast<int>(task / n_images);
    const int64_t index = task % n_images;
    const ImageEntry &entry = input.entries[static_cast<size_t>(index)];
    TaskResult &result = results[static_cast<size_t>(task)];
    if (skip[static_cast<size_t>(index)]) {
      result.error = "output name collides with an earlier entry";
      return;
    }
    try {
      const Image source = load_image((input.root / entry.relative_path).string());
      RngStream stream = derive_stream(options.master_seed, epoch, index);
      const auto ops = sample_ops(options.space, stream);
      auto [augmented, record] = apply_chain(source, ops, options.space, stream);
      const fs::path out_path =
          output_root / ("epoch_" + std::to_string(epoch)) / out_rel[static_cast<size_t>(index)];
      save_image(augmented, out_path.string());
      if (options.emit_records) {
        nlohmann::ordered_json line;
        line["epoch"] = epoch;
        line["index"] = index;
        line["path"] = entry.relative_path;
        line["record"] = nlohmann::ordered_json::parse(
            applied_record_to_json(record, options.space));
        result.record_json = line.dump();
      }
      result.ok = true;
    } catch (const std::exception &e) {
      result.error = e.what();
    }
  });

  RunManifest manifest;
  manifest.master_seed = options.master_seed;
  manifest.epochs = epochs;
  manifest.space = options.space;
  manifest.image_count = n_images;
  manifest.records_emitted = options.emit_records;
  for (int64_t task = 0; task < total; ++task) {
    const auto &result = results[static_cast<size_t>(task)];
    if (result.ok) {
      ++manifest.outputs_written;
    } else {
      manifest.failures.push_back({static_cast<int>(task / n_images),
                                   input.entries[static_cast<size_t>(task % n_images)]
                                       .relative_path,
                                   result.error});
    }
  }

  if (options.emit_records) {
    std::ofstream records(output_root / "records.jsonl", std::ios::binary | std::ios::trunc);
    for (const auto &result : results) {
      if (result.ok) {
        records << result.record_json << '\n';
      }
    }
  }
  std::ofstream manifest_file(output_root / "manifest.json", std::ios::binary | std::ios::trunc);
  manifest_file << manifest_to_json(manifest);

  return manifest;
}

}  // namespace uniaug
