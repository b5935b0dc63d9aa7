#pragma once
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace kzl {

// Worker count: KZL_THREADS if set, else 1.  Results are merged by index, so
// the output is identical at any thread count.
inline unsigned threadCount() {
    if (const char* env = std::getenv("KZL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return 1;
}

template <typename T>
std::vector<T> parallelMap(size_t count, const std::function<T(size_t)>& fn) {
    std::vector<T> out(count);
    unsigned workers = std::min<size_t>(threadCount(), count ? count : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                out[i] = fn(i);
            }
        });
    for (auto& th : pool)
        th.join();
    return out;
}

} // namespace kzl
