// parallel.hpp: order-preserving parallel map over an index range

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace cqed {

// Evaluates fn(i) for i in [0, count) on up to `jobs` threads. Results are
// stored by index, so the output never depends on scheduling. The first
// exception thrown by any worker is rethrown after all workers join.
template <typename Fn>
auto parallel_map(std::size_t count, int jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<Result> results(count);
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(std::min(workers, count));
    for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace cqed
