#ifndef CATLAB_PARALLEL_HPP
#define CATLAB_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace catlab {

/// Fans `trials` independent trials out over `workers` threads and returns how
/// many returned true. `fn(t)` must depend only on the trial index t (each
/// trial derives its own RNG stream), so the result is identical for every
/// worker count, including the serial reference mode workers == 1.
template <typename Fn>
std::uint64_t count_trials(std::uint64_t trials, int workers, Fn&& fn) {
    if (workers <= 1) {
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < trials; ++t)
            if (fn(t)) ++hits;
        return hits;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> hits{0};
    const std::uint64_t chunk = 256;
    auto body = [&]() {
        std::uint64_t local = 0;
        while (true) {
            std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= trials) break;
            std::uint64_t end = std::min(begin + chunk, trials);
            for (std::uint64_t t = begin; t < end; ++t)
                if (fn(t)) ++local;
        }
        hits.fetch_add(local);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return hits.load();
}

/// Sum of fn(t) over all trials; same determinism contract as count_trials.
template <typename Fn>
std::uint64_t sum_trials(std::uint64_t trials, int workers, Fn&& fn) {
    if (workers <= 1) {
        std::uint64_t acc = 0;
        for (std::uint64_t t = 0; t < trials; ++t) acc += fn(t);
        return acc;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> acc{0};
    const std::uint64_t chunk = 256;
    auto body = [&]() {
        std::uint64_t local = 0;
        while (true) {
            std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= trials) break;
            std::uint64_t end = std::min(begin + chunk, trials);
            for (std::uint64_t t = begin; t < end; ++t) local += fn(t);
        }
        acc.fetch_add(local);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return acc.load();
}

} // namespace catlab

#endif
