#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cubesense {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// One independent generator per trial, so trial loops can run in any order
// (or in parallel) and still reproduce bit-identical results from one seed.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ (trial + 1)));
}

// k distinct values from [0, universe), ascending. Partial Fisher-Yates.
inline std::vector<std::uint32_t> sample_distinct(std::uint32_t universe, std::uint32_t k,
                                                  std::mt19937_64& rng) {
    std::vector<std::uint32_t> pool(universe);
    for (std::uint32_t i = 0; i < universe; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::uint32_t> dist(i, universe - 1);
        std::swap(pool[i], pool[dist(rng)]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace cubesense
