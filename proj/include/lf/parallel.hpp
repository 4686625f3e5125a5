#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lf {

// Worker cap from LF_THREADS (0 or unset = hardware concurrency).
inline unsigned worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("LF_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return hw;
}

// Runs f(i) for i in [0, count). Each index must write only its own output
// slot; the split across threads never affects results.
template <typename F>
void parallel_for_index(std::size_t count, F&& f) {
    const unsigned threads = std::min<std::size_t>(worker_threads(), count);
    if (threads <= 1 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lf
