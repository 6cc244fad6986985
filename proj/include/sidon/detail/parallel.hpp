// parallel.hpp — fork/join helper for sharding triple enumeration.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace sidon::detail {

/// 0 means "all cores"; anything else is clamped to [1, 256].
inline int resolve_workers(int requested) {
    if (requested <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return std::min(requested, 256);
}

/// Runs body(begin, end) over dynamically-grabbed chunks of [0, count).
/// Work per index may be wildly uneven (outer index of a triangular triple
/// loop), hence the shared cursor rather than static striping. Callers must
/// make their writes commutative (counter adds, bitwise OR) so the result is
/// identical for every worker count.
template <typename Body>
void parallel_chunks(std::uint32_t count, int workers, std::uint32_t chunk,
                     const Body& body) {
    workers = std::min<std::uint32_t>(resolve_workers(workers),
                                      std::max<std::uint32_t>(1, count / chunk));
    if (workers <= 1 || count == 0) {
        if (count != 0) {
            body(0, count);
        }
        return;
    }
    std::atomic<std::uint32_t> cursor{0};
    auto run = [&] {
        for (;;) {
            const std::uint32_t begin =
                cursor.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= count) {
                return;
            }
            body(begin, std::min(begin + chunk, count));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(run);
    }
    run();
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace sidon::detail
