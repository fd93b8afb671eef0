#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace signpart {

/// Runs body(i) for every i in [0, count) across the given number of workers.
/// Scheduling is dynamic, so callers must not depend on visit order; results
/// should be written into per-index slots.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            body(i);
        }
    };
    const unsigned n = static_cast<unsigned>(
        std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

/// Splits [0, count) into one contiguous chunk per worker and runs
/// body(begin, end) for each chunk. Useful when each worker carries its own
/// evaluation session over its range.
template <class F>
void parallel_chunks(std::size_t count, unsigned workers, F&& body) {
    if (workers <= 1 || count <= 1) {
        if (count > 0) body(std::size_t{0}, count);
        return;
    }
    const std::size_t n = std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(n);
    const std::size_t base = count / n;
    const std::size_t extra = count % n;
    std::size_t begin = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t len = base + (t < extra ? 1 : 0);
        pool.emplace_back([&body, begin, len] { body(begin, begin + len); });
        begin += len;
    }
    for (auto& th : pool) th.join();
}

}  // namespace signpart
