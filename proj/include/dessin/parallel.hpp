#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dessin {

// Process-wide default worker count. The CLI sets this from --jobs; engines
// must produce results independent of the schedule (workers write disjoint
// slots, reductions run in index order).
int default_jobs();
void set_default_jobs(int jobs);

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int jobs = 0) {
    if (jobs <= 0) jobs = default_jobs();
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dessin
