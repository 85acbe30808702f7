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
#ifndef UNIAUG_TESTS_SUPPORT_HPP_
#define UNIAUG_TESTS_SUPPORT_HPP_

#include <atomic>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "uniaug/image.hpp"
#include "uniaug/rng.hpp"

namespace uniaug::test {

inline Image random_image(RngStream &rng, int w, int h) {
  Image img(w, h);
  for (auto &b : img.data) {
    b = static_cast<uint8_t>(rng.next_below(256));
  }
  return img;
}

inline Image random_sized_image(RngStream &rng, int max_dim = 64) {
  const int w = 1 + static_cast<int>(rng.next_below(static_cast<uint32_t>(max_dim)));
  const int h = 1 + static_cast<int>(rng.next_below(static_cast<uint32_t>(max_dim)));
  return random_image(rng, w, h);
}

/// Random image with no pixel equal to kFillColor (for fill-counting oracles).
inline Image random_image_no_fill(RngStream &rng, int w, int h) {
  Image img = random_image(rng, w, h);
  for (size_t i = 0; i < img.pixel_count(); ++i) {
    uint8_t *px = img.data.data() + i * 3;
    if (px[0] == kFillColor[0] && px[1] == kFillColor[1] && px[2] == kFillColor[2]) {
      px[0] = 0;
    }
  }
  return img;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("uniaug_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace uniaug::test

#endif  // UNIAUG_TESTS_SUPPORT_HPP_
