#pragma once

#include <cstdlib>
#include <deque>
#include <future>
#include <string>
#include <thread>

namespace relnet::parallel {

/// Number of workers for fan-out loops: hardware concurrency, optionally
/// capped by the RELIANCE_THREADS environment variable.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RELIANCE_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1 && cap < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

/// Runs compute(i) for i in [0, count), possibly concurrently, and feeds the
/// results to consume(i, result) in ascending i. The reduction order is
/// fixed, so floating-point totals are identical for any worker count.
template <typename Compute, typename Consume>
void ordered_map_reduce(std::size_t count, Compute&& compute, Consume&& consume,
                        unsigned workers = worker_count()) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) consume(i, compute(i));
        return;
    }
    using Result = decltype(compute(std::size_t{}));
    std::deque<std::future<Result>> window;
    std::size_t launched = 0, consumed = 0;
    while (consumed < count) {
        while (launched < count && window.size() < workers) {
            window.push_back(std::async(std::launch::async,
                                        [&compute, i = launched] { return compute(i); }));
            ++launched;
        }
        consume(consumed++, window.front().get());
        window.pop_front();
    }
}

} // namespace relnet::parallel
