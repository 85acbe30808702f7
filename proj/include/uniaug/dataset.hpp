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
#ifndef UNIAUG_DATASET_HPP_
#define UNIAUG_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uniaug {

struct ImageEntry {
  std::string relative_path;         // '/'-separated
  std::optional<std::string> label;  // first-level subdirectory, when nested
};

/// A directory-tree dataset. Entry indices are a pure function of the
/// byte-wise sort of relative paths, independent of platform and of
/// directory iteration order.
struct DatasetRef {
  std::filesystem::path root;
  std::vector<ImageEntry> entries;
};

/// Recursively collects .png/.jpg/.jpeg files (case-insensitive).
/// Throws InputError if root is missing or holds no images.
DatasetRef enumerate_dataset(const std::filesystem::path &root);

}  // namespace uniaug

#endif  // UNIAUG_DATASET_HPP_
