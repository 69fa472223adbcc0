#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rlab {

// Runs fn(i) for i in [0, count) over `workers` threads. Work items own their
// output slots, so results are identical for any worker count.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto run = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(workers, count);
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

// RAMSEY_LAB_THREADS overrides the worker count; falls back to `flag_value`.
inline int resolve_workers(int flag_value) {
    if (const char* env = std::getenv("RAMSEY_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return flag_value >= 1 ? flag_value : 1;
}

} // namespace rlab
