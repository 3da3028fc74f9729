#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace topo::par {

// Worker count for per-space sweeps, from TOPOLAB_THREADS. Defaults to 1;
// results are index-addressed, so the count never affects output bytes.
inline int thread_count() {
    static const int count = [] {
        const char* env = std::getenv("TOPOLAB_THREADS");
        if (!env) return 1;
        int value = std::atoi(env);
        if (value < 1) return 1;
        if (value > 64) return 64;
        return value;
    }();
    return count;
}

template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const int workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t used = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (std::size_t w = 0; w < used; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += used) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace topo::par
