#include "ahgmm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ahgmm {

namespace {
std::atomic<int> g_num_threads{1};
}

void set_num_threads(int n) {
    g_num_threads.store(std::max(1, n));
}

int num_threads() {
    return g_num_threads.load();
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int n = end - begin;
    if (n <= 0) return;

    const int workers = std::min(num_threads(), n);
    if (workers == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }

    // Contiguous chunks; each index runs on exactly one thread in order.
    const int chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace ahgmm
