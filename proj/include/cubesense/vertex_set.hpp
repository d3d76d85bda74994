#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubesense/dense_graph.hpp"
#include "cubesense/errors.hpp"

namespace cubesense {

// A subset of Q^n's 2^n vertices as a membership bit vector. Same hex wire
// convention as truth tables: lowercase, most-significant nibble first,
// ceil(2^n / 4) digits, paired with an explicit n.
class VertexSet {
public:
    static constexpr int kMaxDim = 20;

    explicit VertexSet(int n) : n_(checked_dim(n)) {
        words_.assign(word_count(n_), 0);
    }

    static VertexSet all(int n) {
        VertexSet s(n);
        for (std::uint64_t v = 0; v < s.size(); ++v) s.insert(v);
        return s;
    }

    // The 2^{n-1} vertices of even Hamming weight: an independent set in Q^n.
    static VertexSet even_vertices(int n) {
        VertexSet s(n);
        for (std::uint64_t v = 0; v < s.size(); ++v)
            if ((std::popcount(v) & 1) == 0) s.insert(v);
        return s;
    }

    static VertexSet from_indices(int n, const std::vector<std::uint64_t>& idx) {
        VertexSet s(n);
        for (auto v : idx) {
            if (v >= s.size()) throw IndexOutOfRange("vertex index out of range");
            s.insert(v);
        }
        return s;
    }

    int cube_dim() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    bool contains(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(std::uint64_t v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void erase(std::uint64_t v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

    std::uint64_t cardinality() const {
        std::uint64_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
        if (n_ < 6) s.words_[0] &= (std::uint64_t(1) << size()) - 1;
        return s;
    }

    std::vector<std::uint64_t> to_indices() const {
        std::vector<std::uint64_t> out;
        out.reserve(cardinality());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back((std::uint64_t(w) << 6) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_hex() const {
        const std::size_t digits = hex_digits(n_);
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            const std::size_t shift = 4 * (digits - 1 - d);
            const unsigned nib = (words_[shift >> 6] >> (shift & 63)) & 0xF;
            out[d] = "0123456789abcdef"[nib];
        }
        return out;
    }

    static VertexSet parse_hex(std::string_view hex, int n) {
        VertexSet s(n);
        if (hex.size() != hex_digits(n))
            throw ParseError("vertex set hex: expected " + std::to_string(hex_digits(n)) +
                             " digits for n=" + std::to_string(n));
        for (std::size_t d = 0; d < hex.size(); ++d) {
            unsigned nib = 0;
            const char c = hex[d];
            if (c >= '0' && c <= '9') nib = unsigned(c - '0');
            else if (c >= 'a' && c <= 'f') nib = unsigned(c - 'a' + 10);
            else throw ParseError(std::string("vertex set hex: bad character '") + c + "'");
            const std::size_t shift = 4 * (hex.size() - 1 - d);
            s.words_[shift >> 6] |= std::uint64_t(nib) << (shift & 63);
        }
        if (n < 2 && (s.words_[0] >> s.size()) != 0)
            throw ParseError("vertex set hex: bits set past universe end");
        return s;
    }

    static std::size_t hex_digits(int n) {
        return std::size_t(((std::uint64_t(1) << n) + 3) / 4);
    }

    bool operator==(const VertexSet&) const = default;

private:
    static int checked_dim(int n) {
        if (n < 0 || n > kMaxDim)
            throw DimensionTooLarge("cube dimension must be in [0, " +
                                    std::to_string(kMaxDim) + "]");
        return n;
    }
    static std::size_t word_count(int n) {
        return std::size_t(((std::uint64_t(1) << n) + 63) / 64);
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

// The n cube neighbors of v: flip each coordinate once.
inline std::vector<std::uint64_t> neighbors(int n, std::uint64_t v) {
    std::vector<std::uint64_t> out(std::size_t(n));
    for (int i = 0; i < n; ++i) out[std::size_t(i)] = v ^ (std::uint64_t(1) << i);
    return out;
}

struct DegreeReport {
    int delta_h = 0;
    int delta_complement = 0;
    int gamma = 0;
    std::optional<std::uint64_t> argmax_h;
    std::optional<std::uint64_t> argmax_complement;
};

// Max degree inside H, inside Q^n - H, and their max. Empty sides have
// degree 0 and no witness.
inline DegreeReport induced_degrees(const VertexSet& h) {
    DegreeReport r;
    const int n = h.cube_dim();
    for (std::uint64_t v = 0; v < h.size(); ++v) {
        const bool side = h.contains(v);
        int d = 0;
        for (int i = 0; i < n; ++i)
            d += h.contains(v ^ (std::uint64_t(1) << i)) == side;
        if (side) {
            if (!r.argmax_h || d > r.delta_h) {
                r.delta_h = d;
                r.argmax_h = v;
            }
        } else {
            if (!r.argmax_complement || d > r.delta_complement) {
                r.delta_complement = d;
                r.argmax_complement = v;
            }
        }
    }
    r.delta_h = r.argmax_h ? r.delta_h : 0;
    r.delta_complement = r.argmax_complement ? r.delta_complement : 0;
    r.gamma = std::max(r.delta_h, r.delta_complement);
    return r;
}

// All even vertices plus the weight-one vertex 1: cardinality 2^{n-1} + 1,
// inducing a star K_{1,n} plus isolated vertices.
inline VertexSet star_plus_isolated(int n) {
    if (n < 1) throw InvalidParams("star construction needs n >= 1");
    VertexSet s = VertexSet::even_vertices(n);
    s.insert(1);
    return s;
}

// Adjacency graph induced on H's members, relabeled by ascending vertex index
// (the same order principal submatrices use).
inline DenseGraph induced_graph(const VertexSet& h) {
    const auto members = h.to_indices();
    DenseGraph g(int(members.size()));
    const int n = h.cube_dim();
    std::vector<std::int32_t> rank(h.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) rank[members[i]] = std::int32_t(i);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (int b = 0; b < n; ++b) {
            const std::uint64_t u = members[i] ^ (std::uint64_t(1) << b);
            if (u > members[i] && rank[u] >= 0) g.add_edge(int(i), int(rank[u]));
        }
    }
    return g;
}

} // namespace cubesense
