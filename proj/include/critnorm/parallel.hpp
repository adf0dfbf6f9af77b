#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace critnorm {

/// Number of worker threads: explicit request, else CRITNORM_THREADS, else 4.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CRITNORM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 4;
}

/// Runs fn(i) for i in [0,n) on up to `threads` workers.  Each index is
/// processed exactly once; callers keep determinism by writing results into
/// slot i and reducing in index order afterwards.  The first exception
/// thrown by any worker is rethrown on the calling thread after the join.
inline void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
    threads = int(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, n)));
    if (threads <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr error;
    std::mutex error_mu;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::int64_t i = t; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace critnorm
