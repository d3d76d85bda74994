#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cubesense/errors.hpp"

namespace cubesense {

// Simple undirected graph on [0, m) with bitset adjacency rows.
class DenseGraph {
public:
    explicit DenseGraph(int m) : m_(m), row_words_((m + 63) / 64), bits_(std::size_t(m) * row_words_, 0) {
        if (m < 0) throw InvalidParams("graph size must be non-negative");
    }

    int size() const { return m_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw InvalidParams("no self-loops");
        set_bit(u, v);
        set_bit(v, u);
    }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (row(u)[std::size_t(v) >> 6] >> (v & 63)) & 1u;
    }

    int degree(int u) const {
        check(u);
        int d = 0;
        const std::uint64_t* r = row(u);
        for (std::size_t w = 0; w < row_words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    int max_degree() const {
        int m = 0;
        for (int u = 0; u < m_; ++u) m = std::max(m, degree(u));
        return m;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= m_) throw IndexOutOfRange("vertex out of range");
    }
    const std::uint64_t* row(int u) const { return bits_.data() + std::size_t(u) * row_words_; }
    void set_bit(int u, int v) {
        bits_[std::size_t(u) * row_words_ + (std::size_t(v) >> 6)] |= std::uint64_t(1) << (v & 63);
    }

    int m_;
    std::size_t row_words_;
    std::vector<std::uint64_t> bits_;
};

// Q^n: vertices are n-bit vectors, edges join vectors differing in one bit.
inline DenseGraph hypercube_graph(int n) {
    if (n < 0 || n > 20) throw DimensionTooLarge("hypercube dimension must be in [0, 20]");
    const std::uint64_t count = std::uint64_t(1) << n;
    DenseGraph g(int(count));
    for (std::uint64_t v = 0; v < count; ++v)
        for (int i = 0; i < n; ++i) {
            const std::uint64_t u = v ^ (std::uint64_t(1) << i);
            if (u > v) g.add_edge(int(v), int(u));
        }
    return g;
}

} // namespace cubesense
