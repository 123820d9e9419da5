#ifndef CATALAN_PARALLEL_HPP
#define CATALAN_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace catalan {

// Run fn(i) for i in [0, total). Work is split into contiguous blocks, one per
// worker; fn must be safe to call concurrently on distinct indices. Callers
// write into preallocated per-index slots, so results are ordered by index no
// matter how the blocks are scheduled.
template <class Fn>
void parallel_for_index(std::size_t total, int workers, Fn&& fn) {
    if (workers <= 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), total);
    std::vector<std::thread> threads;
    threads.reserve(nw);
    const std::size_t chunk = (total + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace catalan

#endif
