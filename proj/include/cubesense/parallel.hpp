#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace cubesense {

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? hc : 1;
}

// Fork/join over a contiguous index range. per_range(lo, hi) -> R is run on
// disjoint chunks; partial results are merged in chunk order, so the final
// value does not depend on scheduling as long as merge is associative.
template <class R, class PerRange, class Merge>
R parallel_reduce(std::uint64_t begin, std::uint64_t end, unsigned jobs,
                  PerRange per_range, Merge merge) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    unsigned workers = resolve_jobs(jobs);
    if (workers > total) workers = total > 0 ? static_cast<unsigned>(total) : 1;
    if (workers <= 1 || total == 0) return per_range(begin, end);

    std::vector<R> slots(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rem = total % workers;
    std::uint64_t lo = begin;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] { slots[w] = per_range(lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();

    R acc = std::move(slots[0]);
    for (unsigned w = 1; w < workers; ++w) acc = merge(std::move(acc), std::move(slots[w]));
    return acc;
}

} // namespace cubesense
