#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace oseenvb {

/// Splits [0, n) into `threads` contiguous chunks and runs fn(begin, end, chunk)
/// on each. Chunk boundaries depend only on n and threads, so callers that
/// combine per-chunk results in chunk order get the same result for any
/// thread count.
template <typename Fn>
void parallel_chunks(int n, int threads, Fn&& fn)
{
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int c = 0; c < threads; ++c) {
        const int begin = static_cast<int>(static_cast<long>(n) * c / threads);
        const int end = static_cast<int>(static_cast<long>(n) * (c + 1) / threads);
        pool.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
    }
    for (auto& t : pool) t.join();
}

} // namespace oseenvb
