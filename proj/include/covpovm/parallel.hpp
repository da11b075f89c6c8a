// Copyright 2026 The covpovm Authors
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
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace covpovm {

/// Evaluates `partial(i)` for every chunk index i in [0, chunks) on up to
/// `threads` workers and folds the results as ((zero + r0) + r1) + ...
/// The fold order never depends on the thread count, so the result is
/// bit-identical for any `threads`.
template <class T, class Partial>
T ordered_reduce(std::size_t chunks, unsigned threads, T zero, Partial&& partial) {
    std::vector<T> results(chunks, zero);
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(chunks, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks; ++i) results[i] = partial(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i = next++; i < chunks; i = next++) {
                try {
                    results[i] = partial(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    T total = std::move(zero);
    for (auto& r : results) total = total + r;
    return total;
}

}  // namespace covpovm
