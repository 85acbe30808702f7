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
#include <atomic>
#include <cstdlib>
#include <string>

#include "uniaug/error.hpp"
#include "uniaug/kernels.hpp"

namespace uniaug::kernels {
namespace {

std::atomic<const KernelTable *> g_active{nullptr};

const KernelTable &detect_best() {
#if defined(UNIAUG_HAVE_AVX2)
  if (cpu_has_avx2()) {
    return avx2_table();
  }
#endif
#if defined(UNIAUG_HAVE_NEON)
  return neon_table();
#endif
  return scalar_table();
}

const KernelTable *lookup(std::string_view name) {
  if (name == "scalar") {
    return &scalar_table();
  }
#if defined(UNIAUG_HAVE_AVX2)
  if (name == "avx2" && cpu_has_avx2()) {
    return &avx2_table();
  }
#endif
#if defined(UNIAUG_HAVE_NEON)
  if (name == "neon") {
    return &neon_table();
  }
#endif
  if (name == "auto") {
    return &detect_best();
  }
  return nullptr;
}

const KernelTable &initial_table() {
  if (const char *env = std::getenv("UNIAUG_KERNELS")) {
    if (const KernelTable *t = lookup(env)) {
      return *t;
    }
    // Unknown or unavailable request in the environment falls back to auto.
  }
  return detect_best();
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable &active() {
  const KernelTable *t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = &initial_table();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void force(std::string_view name) {
  const KernelTable *t = lookup(name);
  if (t == nullptr) {
    throw ConfigError("kernel implementation not available: " + std::string(name));
  }
  g_active.store(t, std::memory_order_release);
}

}  // namespace uniaug::kernels
