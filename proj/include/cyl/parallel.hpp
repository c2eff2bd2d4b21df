#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cyl {

/// Worker count for data-parallel loops. Honors CYL_NUM_THREADS (>=1);
/// defaults to the hardware concurrency.
inline unsigned num_threads() {
    if (const char* env = std::getenv("CYL_NUM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over a partition of [0, n). Falls back to a single
/// call when n is below `grain` or only one thread is configured. Result
/// combination is the caller's job; keep per-chunk state separate and merge
/// serially so reductions stay deterministic.
inline void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                            std::size_t grain = 2048) {
    unsigned workers = num_threads();
    if (workers <= 1 || n < std::max<std::size_t>(grain, 2)) {
        fn(0, n);
        return;
    }
    workers = std::min<std::size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool) th.join();
}

} // namespace cyl
