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
#ifndef UNIAUG_CODEC_HPP_
#define UNIAUG_CODEC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "uniaug/image.hpp"

namespace uniaug {

/// PNG or JPEG bytes to 8-bit RGB; alpha dropped, grayscale expanded.
/// Throws DecodeError carrying `name` for unsupported or corrupt input.
Image decode_image(const std::vector<uint8_t> &bytes, const std::string &name);

Image load_image(const std::string &path);

/// Lossless PNG bytes; decode(encode(img)) reproduces img exactly.
std::vector<uint8_t> encode_image(const Image &image);

void save_image(const Image &image, const std::string &path);

}  // namespace uniaug

#endif  // UNIAUG_CODEC_HPP_
