#pragma once

#include <cstddef>
#include <deque>
#include <future>
#include <vector>

namespace binomdiv {

// Applies fn to 0..count-1, running up to `workers` tasks at a time, and hands
// each result to consume in index order. Results are therefore deterministic
// regardless of scheduling. workers <= 1 degenerates to a plain loop.
template <typename Fn, typename Consume>
void ordered_parallel_map(std::size_t count, unsigned workers, Fn fn, Consume consume) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) consume(i, fn(i));
        return;
    }
    using Result = decltype(fn(std::size_t{0}));
    std::deque<std::future<Result>> window;
    std::size_t next_launch = 0, next_consume = 0;
    while (next_consume < count) {
        while (next_launch < count && window.size() < workers) {
            window.push_back(std::async(std::launch::async, fn, next_launch));
            ++next_launch;
        }
        consume(next_consume, window.front().get()); // may rethrow the task's exception
        window.pop_front();
        ++next_consume;
    }
}

// Convenience wrapper collecting all results into a vector.
template <typename Fn>
auto parallel_map_collect(std::size_t count, unsigned workers, Fn fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(count);
    ordered_parallel_map(count, workers, fn,
                         [&](std::size_t i, Result r) { out[i] = std::move(r); });
    return out;
}

} // namespace binomdiv
