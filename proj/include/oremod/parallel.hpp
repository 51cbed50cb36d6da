#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace oremod {

// Worker count used by the parallel helpers; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned effective_thread_count();

// Applies f to every element, writing results by index so the output order
// is the input order regardless of scheduling.  Deterministic merges are a
// hard requirement for byte-identical reports.
template <class In, class F>
auto parallel_map(const std::vector<In>& xs, F f)
    -> std::vector<decltype(f(xs[std::size_t{0}]))> {
    using Out = decltype(f(xs[std::size_t{0}]));
    std::vector<Out> out(xs.size());
    const unsigned workers = effective_thread_count();
    if (workers <= 1 || xs.size() <= 1) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
        return out;
    }
    std::atomic<std::size_t> cursor{0};
    auto body = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= xs.size()) return;
            out[i] = f(xs[i]);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(workers, xs.size());
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace oremod
