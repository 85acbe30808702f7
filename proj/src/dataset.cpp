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
#include "uniaug/dataset.hpp"

#include <algorithm>
#include <cctype>

#include "uniaug/error.hpp"

namespace uniaug {
namespace {

bool has_image_extension(const std::filesystem::path &p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

DatasetRef enumerate_dataset(const std::filesystem::path &root) {
  namespace fs = std::filesystem;
  if (!fs::exists(root) || !fs::is_directory(root)) {
    throw InputError("dataset directory not found: " + root.string());
  }
  DatasetRef ref;
  ref.root = root;
  for (const auto &entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || !has_image_extension(entry.path())) {
      continue;
    }
    ImageEntry img;
    img.relative_path = entry.path().lexically_relative(root).generic_string();
    const auto slash = img.relative_path.find('/');
    if (slash != std::string::npos) {
      img.label = img.relative_path.substr(0, slash);
    }
    ref.entries.push_back(std::move(img));
  }
  if (ref.entries.empty()) {
    throw InputError("dataset holds no .png/.jpg/.jpeg files: " + root.string());
  }
  // Index order is the byte-wise sort of '/'-separated relative paths.
  std::sort(ref.entries.begin(), ref.entries.end(),
            [](const ImageEntry &a, const ImageEntry &b) {
              return a.relative_path < b.relative_path;
            });
  return ref;
}

}  // namespace uniaug
