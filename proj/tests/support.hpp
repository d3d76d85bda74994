#pragma once

// Test-only oracles, deliberately written against the definitions rather
// than the library's algorithms.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "cubesense.hpp"

namespace testsupport {

using cubesense::SignedMatrix;
using cubesense::TruthTable;

// Max family of pairwise-disjoint sensitive blocks, by explicit enumeration:
// list every sensitive block, then DFS over families in increasing block
// order checking disjointness pairwise. No DP table involved.
inline int naive_block_sensitivity_at(const TruthTable& f, std::uint64_t x) {
    const bool fx = f.get(x);
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t b = 1; b < f.size(); ++b)
        if (f.get(x ^ b) != fx) blocks.push_back(b);

    int best = 0;
    // families listed with strictly increasing block values to avoid repeats
    struct Frame {
        std::size_t next;
        std::uint64_t used;
        int count;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.count > best) best = fr.count;
        for (std::size_t i = fr.next; i < blocks.size(); ++i)
            if ((blocks[i] & fr.used) == 0)
                stack.push_back({i + 1, fr.used | blocks[i], fr.count + 1});
    }
    return best;
}

inline int naive_block_sensitivity(const TruthTable& f) {
    int best = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x)
        best = std::max(best, naive_block_sensitivity_at(f, x));
    return best;
}

// Closed-form sign of the signed cube matrix on the edge (u, u ^ 2^i):
// one sign flip for every 1-bit of u above coordinate i.
inline int closed_form_sign(std::uint64_t u, int i) {
    return (std::popcount(u >> (i + 1)) & 1) ? -1 : +1;
}

// Symmetric {-1,0,+1} matrix with zero diagonal; each off-diagonal pair is
// -1, 0 or +1 with equal probability.
inline SignedMatrix random_signed_matrix(int dim, std::mt19937_64& rng) {
    SignedMatrix::Builder b(dim);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int u = 0; u < dim; ++u)
        for (int v = u + 1; v < dim; ++v) {
            const int c = coin(rng);
            if (c == 1) b.add(u, v, +1);
            else if (c == 2) b.add(u, v, -1);
        }
    return b.build();
}

// Permute coordinates and XOR-translate inputs: g(x) = f(pi(x) ^ shift).
inline TruthTable transformed(const TruthTable& f, const std::vector<int>& perm,
                              std::uint64_t shift) {
    TruthTable g(f.vars());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        std::uint64_t y = 0;
        for (int i = 0; i < f.vars(); ++i)
            if ((x >> i) & 1) y |= std::uint64_t(1) << perm[std::size_t(i)];
        g.set(x, f.get(y ^ shift));
    }
    return g;
}

} // namespace testsupport
