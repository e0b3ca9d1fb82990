#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace sdf {

/// Runs probe(i) for i in [0, count) and returns the hit belonging to the
/// smallest i whose probe yields a value. Work is split into contiguous
/// chunks across up to `threads` workers; the answer does not depend on the
/// thread count.
template <typename T, typename Probe>
std::optional<T> first_hit(std::size_t count, unsigned threads, Probe probe)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2 * threads) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto hit = probe(i))
                return hit;
        return std::nullopt;
    }

    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::optional<T>> results(threads);
    std::atomic<std::size_t> best_index{count};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(count, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                if (i > best_index.load(std::memory_order_relaxed))
                    return;
                if (auto hit = probe(i)) {
                    results[w] = std::move(hit);
                    std::size_t cur = best_index.load();
                    while (i < cur && !best_index.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (auto& r : results)
        if (r)
            return r;
    return std::nullopt;
}

} // namespace sdf
