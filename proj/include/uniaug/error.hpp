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
#ifndef UNIAUG_ERROR_HPP_
#define UNIAUG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace uniaug {

/// Bad configuration: unknown preset name, malformed space file, invalid space.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

/// Bad runtime input: empty dataset, zero-area image, undersized sample.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

/// Failed to decode an image container; remembers which file.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string &path, const std::string &reason)
      : std::runtime_error(path + ": " + reason), path_(path) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace uniaug

#endif  // UNIAUG_ERROR_HPP_
