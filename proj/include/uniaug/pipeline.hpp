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
#ifndef UNIAUG_PIPELINE_HPP_
#define UNIAUG_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "uniaug/dataset.hpp"
#include "uniaug/rng.hpp"
#include "uniaug/space.hpp"

namespace uniaug {

inline constexpr std::string_view kEngineVersion = "0.1.0";

/// Deterministic stream for one (epoch, image) slot. Distinct slots give
/// unrelated streams, so worker scheduling cannot perturb any output.
RngStream derive_stream(uint64_t master_seed, int epoch, int64_t image_index);

struct FileFailure {
  int epoch = 0;
  std::string relative_path;
  std::string error;

  bool operator==(const FileFailure &) const = default;
};

/// Everything needed to byte-reproduce a run on the same build.
struct RunManifest {
  std::string engine_version{kEngineVersion};
  uint64_t master_seed = 0;
  int epochs = 1;
  AugmentationSpace space;
  int64_t image_count = 0;      // enumerated dataset entries
  int64_t outputs_written = 0;  // successful files across all epochs
  std::vector<FileFailure> failures;
  bool records_emitted = false;
};

std::string manifest_to_json(const RunManifest &manifest);

struct AugmentOptions {
  AugmentationSpace space;
  uint64_t master_seed = 0;
  int epochs = 1;
  int workers = 0;  // 0 -> hardware concurrency
  bool emit_records = false;
};

/**
 * Writes output_root/epoch_<e>/<relative path>.png for every entry and
 * epoch, preserving the label subdirectory structure, plus manifest.json
 * and (with emit_records) records.jsonl ordered by (epoch, index).
 * Per-file decode failures are recorded and the run continues. The output
 * tree is byte-identical for any worker count.
 */
RunManifest augment_dataset(const DatasetRef &input, const std::filesystem::path &output_root,
                            const AugmentOptions &options);

}  // namespace uniaug

#endif  // UNIAUG_PIPELINE_HPP_
