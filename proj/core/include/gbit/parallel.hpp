// Copyright 2026 The gbit Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gbit {

/// Worker count: GBIT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int worker_count_from_env();

/// Calls fn(k) for k in [0, n) on up to `threads` workers. Every index is
/// visited exactly once; callers write results by index so the outcome does not
/// depend on scheduling. The first exception (lowest index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::mutex mu;
    std::size_t failed_index = n;
    std::exception_ptr failure;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < n; k += workers) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (k < failed_index) {
                        failed_index = k;
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace gbit
