#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace thermoseq {

/// Number of worker threads used by parallel_for. Results never depend on it:
/// every parallel loop in the library writes disjoint outputs or reduces over
/// a fixed chunk grid, so any thread count produces bitwise identical output.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Runs fn(begin, end) over a partition of [0, n). Blocks until done.
template <typename Fn>
void parallel_for_ranges(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (workers <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(n, w * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

/// Runs fn(i) for i in [0, n) with no ordering guarantee between indices.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    parallel_for_ranges(n, [&fn](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
}

}  // namespace thermoseq
