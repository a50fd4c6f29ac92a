#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace korenblum {

/// Worker count: $KORENBLUM_THREADS when set to a positive integer, else the hardware concurrency.
std::size_t default_thread_count();

/**
 * Evaluates fn(i) for i = 0..count-1 on up to `threads` workers and returns the results in index
 * order, so the output never depends on scheduling. The first exception by index is rethrown.
 */
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn, std::size_t threads = default_thread_count()) {
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace korenblum
