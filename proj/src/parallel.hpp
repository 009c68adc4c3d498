// Copyright 2026 The wnr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WNR_SRC_PARALLEL_HPP
#define WNR_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wnr::detail {

inline thread_local bool in_parallel_region = false;

/// Runs f(i) for i in [0, count). Work is split into contiguous blocks, one
/// per hardware thread; each index is independent so the result never
/// depends on the split. The first exception thrown by any block is
/// rethrown on the caller. Nested calls run sequentially.
template <class F>
void parallel_for(std::size_t count, F&& f, std::size_t min_per_thread = 64) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads = std::min(hw, std::max<std::size_t>(1, count / min_per_thread));
  if (threads <= 1 || in_parallel_region) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = count * t / threads;
        const std::size_t hi = count * (t + 1) / threads;
        in_parallel_region = true;
        try {
          for (std::size_t i = lo; i < hi; ++i) f(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace wnr::detail

#endif
