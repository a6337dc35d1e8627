#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace ordconic {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Splits [0, total) into at most `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each. Chunk boundaries depend only on
/// (total, threads), so per-chunk results can be merged deterministically
/// by chunk index.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    std::uint64_t nchunks = static_cast<std::uint64_t>(threads);
    if (nchunks > total) nchunks = total == 0 ? 1 : total;
    if (nchunks <= 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::uint64_t base = total / nchunks, rem = total % nchunks, begin = 0;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t len = base + (c < rem ? 1 : 0);
        pool.emplace_back([&fn, c, begin, end = begin + len] { fn(static_cast<int>(c), begin, end); });
        begin += len;
    }
    for (auto& t : pool) t.join();
}

} // namespace ordconic
