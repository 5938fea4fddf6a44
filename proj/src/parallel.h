/*
 * Copyright 2026 The h2r Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Internal fixed-size parallel-for used by dataset generation.

#ifndef H2R_SRC_PARALLEL_H_
#define H2R_SRC_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace h2r::internal {

// Calls fn(i) for i in [0, n) on up to `workers` threads. The first
// exception (lowest index wins) is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(size_t n, int workers, Fn&& fn) {
  std::atomic<size_t> next{0};
  std::mutex mutex;
  std::exception_ptr failure;
  size_t failure_index = n;
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const int count = std::clamp<int>(workers, 1, std::max<size_t>(n, 1));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < count; ++t) threads.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace h2r::internal

#endif  // H2R_SRC_PARALLEL_H_
