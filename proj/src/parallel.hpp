// Copyright 2026 The koin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOIN_SRC_PARALLEL_HPP_
#define KOIN_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace koin {
namespace detail {

// Runs work(0..count) across up to `jobs` threads. Each index must be
// independent of the others; results land in caller-owned slots, so the
// outcome does not depend on thread count.
inline void run_parallel(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& work) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(
                                                std::min<std::size_t>(
                                                    count, 1u << 10))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= count) return;
        work(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace detail
}  // namespace koin

#endif  // KOIN_SRC_PARALLEL_HPP_
