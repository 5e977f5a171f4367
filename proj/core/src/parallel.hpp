#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "horo/sampler.hpp"

namespace horo::detail {

// Replications are claimed from a shared counter and written to their own
// slot, so the result never depends on which worker ran what.
template <class Fn>
std::vector<Realization> run_parallel(std::uint64_t n, unsigned threads, Fn&& one)
{
    std::vector<Realization> out(n);
    unsigned workers = std::max(1u, threads);
    if (workers == 1 || n == 1) {
        for (std::uint64_t i = 0; i < n; ++i) out[i] = one(i);
        return out;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::uint64_t i = next++; i < n; i = next++) out[i] = one(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace horo::detail
