#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace thetalab {

// Thread budget for data-parallel scans. THETA_LAB_THREADS caps it; unset or
// invalid values fall back to the hardware count.
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("THETA_LAB_THREADS")) {
        char* end = nullptr;
        long requested = std::strtol(env, &end, 10);
        if (end != env && requested >= 1) hw = std::min<long>(hw, requested);
    }
    return hw;
}

// Runs fn(i) for i in [0, count). Work is split into contiguous stripes, one
// per worker; fn must only write to slots owned by index i so the result is
// identical to the serial loop regardless of scheduling.
template <typename F>
void parallel_for(int count, F&& fn) {
    int workers = std::min(max_threads(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int begin = w * chunk;
        int end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace thetalab
