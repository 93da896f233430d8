#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace aflab {

// Number of workers the CLI defaults to.
inline int hardware_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(begin, end) on disjoint chunks of [0, n). All shared inputs must be
// immutable; each chunk writes only to its own slot.
template <typename Fn>
void parallel_chunks(int n, int jobs, Fn&& fn) {
    jobs = std::max(1, std::min(jobs, n));
    if (jobs <= 1 || n <= 1) {
        if (n > 0) fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    int chunk = (n + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        int lo = j * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

// Deterministic map over [0, n): each index produces a result vector, results
// are concatenated in index order regardless of scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_collect(int n, int jobs, Fn&& per_index) {
    std::vector<std::vector<T>> slots(static_cast<size_t>(std::max(n, 0)));
    parallel_chunks(n, jobs, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) slots[static_cast<size_t>(i)] = per_index(i);
    });
    std::vector<T> out;
    for (auto& s : slots)
        for (auto& v : s) out.push_back(std::move(v));
    return out;
}

}  // namespace aflab
