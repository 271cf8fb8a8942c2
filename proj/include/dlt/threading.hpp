#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dlt {

// Runs fn(begin, end) over contiguous chunks of [0, n). The chunking depends
// only on n and threads, never on scheduling, so any value written per index
// is identical across thread counts.
inline void parallel_chunks(std::size_t n, int threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        fn(0, n);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t base = n / workers, extra = n % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t end = begin + base + (w < extra ? 1 : 0);
        pool.emplace_back(fn, begin, end);
        begin = end;
    }
    for (auto& th : pool) th.join();
}

}  // namespace dlt
