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
#ifndef UNIAUG_SRC_PARALLEL_HPP_
#define UNIAUG_SRC_PARALLEL_HPP_

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace uniaug {

inline int resolve_workers(int requested) {
  if (requested > 0) {
    return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/**
 * Runs fn(i) for i in [0, count) on `workers` threads pulling from a shared
 * atomic counter. fn must confine its effects to slot i so the result is
 * independent of scheduling. fn must not throw.
 */
template <typename Fn>
void parallel_for(int64_t count, int workers, Fn &&fn) {
  workers = resolve_workers(workers);
  if (count <= 0) {
    return;
  }
  if (workers == 1 || count == 1) {
    for (int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  auto body = [&] {
    for (;;) {
      const int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) {
        return;
      }
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const auto n_threads = static_cast<size_t>(std::min<int64_t>(workers, count));
  pool.reserve(n_threads);
  for (size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back(body);
  }
  for (auto &t : pool) {
    t.join();
  }
}

}  // namespace uniaug

#endif  // UNIAUG_SRC_PARALLEL_HPP_
