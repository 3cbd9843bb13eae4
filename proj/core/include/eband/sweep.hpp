#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace eband {

/// Evaluate fn(i) for i in [0, n) on up to n_threads workers. Results
/// land in point order, so output is identical for any thread count as
/// long as fn(i) depends only on i (use derived random substreams).
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned n_threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    if (n_threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned k = std::min<std::size_t>(n_threads, n);
    pool.reserve(k);
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace eband
