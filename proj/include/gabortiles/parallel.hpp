#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace gabortiles {

/// Worker count: hardware concurrency capped by GABORTILES_THREADS.
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("GABORTILES_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

/// Runs f(i) for i in [0, n) on a fixed chunk decomposition. The work must be
/// independent per index; results keyed by i stay deterministic.
inline void parallel_for(long long n, const std::function<void(long long)>& f) {
    int workers = max_threads();
    if (n <= 0) return;
    if (workers <= 1 || n < 256) {
        for (long long i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (long long i = lo; i < hi; ++i) f(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace gabortiles
