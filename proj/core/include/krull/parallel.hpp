#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace krull {

// Runs f(i) for i in [0, n) on up to `threads` workers using contiguous chunks.
// The first exception (by chunk order) is rethrown after all workers join.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
    std::size_t workers = threads > 1 ? static_cast<std::size_t>(threads) : 1;
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace krull
