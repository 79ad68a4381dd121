#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace hclass {

// Splits [0, n) into a fixed chunk grid (independent of thread count) and runs
// body(chunk_index, begin, end).  Chunk results must be combined by the caller
// in chunk order so totals are bit-identical for any hardware concurrency.
inline constexpr int kParallelChunks = 64;

template <typename Body>
void parallel_chunks(long long n, Body&& body) {
    if (n <= 0) return;
    int chunks = static_cast<int>(std::min<long long>(kParallelChunks, n));
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = hw ? std::min<unsigned>(hw, static_cast<unsigned>(chunks)) : 1;
    auto range = [&](int ci) {
        long long b = n * ci / chunks, e = n * (ci + 1) / chunks;
        return std::pair<long long, long long>(b, e);
    };
    if (workers <= 1) {
        for (int ci = 0; ci < chunks; ++ci) {
            auto [b, e] = range(ci);
            body(ci, b, e);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int ci = static_cast<int>(w); ci < chunks; ci += static_cast<int>(workers)) {
                auto [b, e] = range(ci);
                body(ci, b, e);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace hclass
