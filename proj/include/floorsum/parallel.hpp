#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace floorsum {

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Run fn(i) for i in [0, count). Each index is processed exactly once;
// fn must write only to its own slot, so the assembled result does not
// depend on the number of workers.
template <class Fn>
void parallel_indexed(std::size_t count, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    if (threads == 0) threads = 1;
    if (threads > count) threads = static_cast<unsigned>(count);
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace floorsum
