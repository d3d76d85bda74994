#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cubesense/errors.hpp"
#include "cubesense/truth_table.hpp"

namespace cubesense {

// Exact block sensitivity runs a DP over coordinate-subset masks (~3^n per
// input); beyond this cap it refuses rather than approximate.
constexpr int kMaxBlockSensVars = 14;

struct MeasureReport {
    int n = 0;
    int s = 0;
    int bs = 0;
    int deg = 0;
    std::uint64_t s_witness = 0;
    std::uint64_t bs_witness = 0;
    std::vector<int> local_s;
    std::vector<int> local_bs;
};

inline int local_sensitivity(const TruthTable& f, std::uint64_t x) {
    const bool fx = f.get(x);
    int cnt = 0;
    for (int i = 0; i < f.vars(); ++i)
        cnt += f.get(flip(x, std::uint64_t(1) << i)) != fx;
    return cnt;
}

namespace detail {

// In-word butterfly masks: bits whose coordinate i is 0, for i < 6.
constexpr std::uint64_t kHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// Word w with each bit x swapped with its partner x ^ (1 << i), i < 6.
inline std::uint64_t swap_stride(std::uint64_t w, int i) {
    const int s = 1 << i;
    const std::uint64_t m = kHalfMask[i];
    return ((w >> s) & m) | ((w & m) << s);
}

} // namespace detail

// Bitmask over inputs: bit x set iff f(x) != f(x ^ (1 << i)).
inline std::vector<std::uint64_t> sensitive_direction_mask(const TruthTable& f, int i) {
    const auto& t = f.words();
    std::vector<std::uint64_t> d(t.size());
    if (i < 6) {
        for (std::size_t w = 0; w < t.size(); ++w)
            d[w] = t[w] ^ detail::swap_stride(t[w], i);
    } else {
        const std::size_t stride = std::size_t(1) << (i - 6);
        for (std::size_t w = 0; w < t.size(); ++w)
            d[w] = t[w] ^ t[w ^ stride];
    }
    if (f.vars() < 6) d[0] &= (std::uint64_t(1) << f.size()) - 1;
    return d;
}

inline std::vector<int> local_sensitivities(const TruthTable& f) {
    std::vector<int> loc(f.size(), 0);
    for (int i = 0; i < f.vars(); ++i) {
        const auto d = sensitive_direction_mask(f, i);
        for (std::size_t w = 0; w < d.size(); ++w) {
            std::uint64_t bits = d[w];
            while (bits) {
                loc[(w << 6) + std::countr_zero(bits)]++;
                bits &= bits - 1;
            }
        }
    }
    return loc;
}

inline int sensitivity(const TruthTable& f) {
    const auto loc = local_sensitivities(f);
    return loc.empty() ? 0 : *std::max_element(loc.begin(), loc.end());
}

namespace detail {

// best[m] = max number of pairwise-disjoint sensitive blocks inside mask m.
// A family's first block B gives 1 + best[m \ B]; the empty family gives 0.
inline int block_sens_dp(const TruthTable& f, std::uint64_t x, std::vector<int>& best) {
    const bool fx = f.get(x);
    const std::uint64_t full = f.size() - 1;
    best.assign(f.size(), 0);
    for (std::uint64_t m = 1; m <= full; ++m) {
        int v = 0;
        for (std::uint64_t b = m; b != 0; b = (b - 1) & m) {
            if (f.get(x ^ b) != fx) {
                const int cand = 1 + best[m ^ b];
                if (cand > v) v = cand;
            }
        }
        best[m] = v;
    }
    return best[full];
}

} // namespace detail

inline int local_block_sensitivity(const TruthTable& f, std::uint64_t x) {
    if (f.vars() > kMaxBlockSensVars)
        throw DimensionTooLarge("block sensitivity is exact only up to n=" +
                                std::to_string(kMaxBlockSensVars));
    if (f.vars() == 0) return 0;
    std::vector<int> scratch;
    return detail::block_sens_dp(f, x, scratch);
}

inline std::vector<int> local_block_sensitivities(const TruthTable& f) {
    if (f.vars() > kMaxBlockSensVars)
        throw DimensionTooLarge("block sensitivity is exact only up to n=" +
                                std::to_string(kMaxBlockSensVars));
    std::vector<int> loc(f.size(), 0);
    if (f.vars() == 0) return loc;
    std::vector<int> scratch;
    for (std::uint64_t x = 0; x < f.size(); ++x)
        loc[x] = detail::block_sens_dp(f, x, scratch);
    return loc;
}

inline int block_sensitivity(const TruthTable& f) {
    const auto loc = local_block_sensitivities(f);
    return loc.empty() ? 0 : *std::max_element(loc.begin(), loc.end());
}

// The unique multilinear polynomial agreeing with f on {0,1}^n.
// coeffs[S] is the (integer) coefficient of prod_{i in S} x_i.
struct MultilinearPoly {
    int n = 0;
    std::vector<std::int64_t> coeffs;

    std::int64_t eval(std::uint64_t x) const {
        // monomials contribute iff their support is a subset of x
        std::int64_t v = coeffs[0];
        for (std::uint64_t s = x; s != 0; s = (s - 1) & x) v += coeffs[s];
        return v;
    }

    int degree() const {
        int d = 0;
        for (std::uint64_t s = 0; s < coeffs.size(); ++s)
            if (coeffs[s] != 0) d = std::max(d, std::popcount(s));
        return d;
    }
};

inline MultilinearPoly multilinear_expand(const TruthTable& f) {
    MultilinearPoly p;
    p.n = f.vars();
    p.coeffs.resize(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) p.coeffs[x] = f.get(x) ? 1 : 0;
    // Moebius transform over the subset lattice, exact in int64
    for (int i = 0; i < p.n; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << i;
        for (std::uint64_t m = 0; m < f.size(); ++m)
            if (m & bit) p.coeffs[m] -= p.coeffs[m ^ bit];
    }
    return p;
}

// Degree of the zero function is 0 by convention.
inline int degree(const TruthTable& f) { return multilinear_expand(f).degree(); }

inline MeasureReport measure(const TruthTable& f) {
    MeasureReport r;
    r.n = f.vars();
    r.local_s = local_sensitivities(f);
    r.local_bs = local_block_sensitivities(f);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        if (r.local_s[x] > r.s) {
            r.s = r.local_s[x];
            r.s_witness = x;
        }
        if (r.local_bs[x] > r.bs) {
            r.bs = r.local_bs[x];
            r.bs_witness = x;
        }
    }
    r.deg = degree(f);
    return r;
}

} // namespace cubesense
