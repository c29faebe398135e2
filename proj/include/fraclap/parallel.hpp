#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace fraclap {

// Index-addressed parallel map. Each item writes only its own slot, so the
// gathered output is identical for any worker count.
template <class F>
void parallel_for(int n, int jobs, F&& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    const int n_workers = std::min(jobs, n);
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace fraclap
