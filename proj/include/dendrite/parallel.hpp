#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "dendrite/rng.hpp"

namespace dendrite {

/// Runs `fn(replica, rng)` for replica = 0..count-1 across `workers` threads
/// and returns the results in replica order. Each replica draws from its own
/// stream derived from (seed, replica), so the output is independent of the
/// worker count.
template <typename T>
std::vector<T> parallel_replicas(int count, int workers, std::uint64_t seed,
                                 const std::function<T(int, Rng&)>& fn) {
    std::vector<T> out(count);
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
            out[i] = fn(i, rng);
        }
        return out;
    }
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
            out[i] = fn(i, rng);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace dendrite
