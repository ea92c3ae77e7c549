#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace quintic {

/// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size
/// chunks.  Chunk boundaries depend only on n and chunk_size, never on the
/// worker count, so per-chunk results merge deterministically.
template <typename Fn>
void for_each_chunk(std::size_t n, std::size_t chunk_size, int workers, Fn&& fn) {
    if (chunk_size == 0) chunk_size = 1;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    if (workers <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        while (true) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks || failed.load()) break;
            try {
                fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                break;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(workers, static_cast<int>(nchunks));
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failed.load() && failure) std::rethrow_exception(failure);
}

}  // namespace quintic
