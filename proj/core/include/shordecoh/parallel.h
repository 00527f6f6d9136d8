// Copyright 2026 The shordecoh Authors
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

#ifndef SHORDECOH_PARALLEL_H
#define SHORDECOH_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shordecoh {

/// Splits [0, count) into at most `threads` contiguous blocks and runs
/// body(begin, end) on each, one worker per block. The first exception
/// thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_blocks(std::size_t count, unsigned threads, Body &&body) {
    if (threads <= 1 || count < 2) {
        body(std::size_t{0}, count);
        return;
    }
    std::size_t workers = std::min<std::size_t>(threads, count);
    std::size_t block = (count + workers - 1) / workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * block;
            std::size_t end = std::min(count, begin + block);
            if (begin >= end) {
                break;
            }
            pool.emplace_back([&, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Runs body(i) for every i in [0, count). body must only write to slot i,
/// so results do not depend on the thread count.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body &&body) {
    parallel_blocks(count, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            body(i);
        }
    });
}

}  // namespace shordecoh

#endif
