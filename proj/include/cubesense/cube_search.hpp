#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubesense/gl_bridge.hpp"
#include "cubesense/parallel.hpp"
#include "cubesense/rng.hpp"
#include "cubesense/signed_matrix.hpp"
#include "cubesense/spectral.hpp"
#include "cubesense/vertex_set.hpp"

namespace cubesense {

// ceil(sqrt(n)) for small n, exactly.
inline int int_ceil_sqrt(int n) {
    int r = 0;
    while (r * r < n) ++r;
    return r;
}

struct MinDegreeScanReport {
    int n = 0;
    std::string mode;
    std::uint64_t tested = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int min_delta = 0;
    std::optional<VertexSet> witness; // a subset attaining min_delta
    std::vector<std::string> failures; // subsets with delta below ceil(sqrt(n))

    bool passed() const { return failures.empty(); }
};

namespace detail {

// max degree of the subgraph induced on `members` (bitmask over <= 32 vertices)
inline int subset_max_degree_mask(std::uint32_t members, const std::vector<std::uint32_t>& nbr) {
    int best = 0;
    std::uint32_t rest = members;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        best = std::max(best, std::popcount(nbr[std::size_t(v)] & members));
    }
    return best;
}

} // namespace detail

// Every (2^{n-1}+1)-vertex induced subgraph of Q^n has max degree at least
// ceil(sqrt(n)). Exhaustive enumeration for n <= 4 (colex order over subsets)
// or seeded uniform sampling for n <= 12. Reports the minimum degree seen and
// a subset attaining it; any subset below the bound lands in failures.
inline MinDegreeScanReport scan_min_degree(int n, Mode mode, std::uint64_t trials = 0,
                                           std::uint64_t seed = 0, unsigned jobs = 0) {
    MinDegreeScanReport rep;
    rep.n = n;
    rep.mode = mode_name(mode);
    rep.seed = seed;
    if (n < 1) throw InvalidParams("cube dimension must be >= 1");

    const int bound = int_ceil_sqrt(n);
    const std::uint64_t picks = (std::uint64_t(1) << (n - 1)) + 1;

    if (mode == Mode::exhaustive) {
        if (n > 4) throw DimensionTooLarge("exhaustive subset scan capped at n = 4");
        const std::uint32_t universe = std::uint32_t(1) << n; // <= 16
        std::vector<std::uint32_t> nbr(universe);
        for (std::uint32_t v = 0; v < universe; ++v)
            for (int i = 0; i < n; ++i) nbr[v] |= std::uint32_t(1) << (v ^ (1u << i));

        int min_delta = -1;
        std::optional<VertexSet> witness;
        auto as_set = [&](std::uint32_t mask) {
            std::vector<std::uint64_t> idx;
            for (std::uint32_t m = mask; m; m &= m - 1)
                idx.push_back(std::uint64_t(std::countr_zero(m)));
            return VertexSet::from_indices(n, idx);
        };
        // Gosper's hack: all `picks`-subsets of [0, universe) in colex order
        std::uint32_t mask = (std::uint32_t(1) << picks) - 1;
        const std::uint32_t limit = std::uint32_t(1) << universe;
        while (mask < limit) {
            const int delta = detail::subset_max_degree_mask(mask, nbr);
            if (min_delta < 0 || delta < min_delta) {
                min_delta = delta;
                witness = as_set(mask);
            }
            if (delta < bound) rep.failures.push_back(as_set(mask).to_hex());
            rep.tested += 1;
            const std::uint32_t c = mask & (0u - mask);
            const std::uint32_t r = mask + c;
            if (c == 0 || r == 0) break;
            mask = r | (((mask ^ r) >> 2) / c);
        }
        rep.min_delta = min_delta;
        rep.witness = std::move(witness);
        return rep;
    }

    if (n > 12) throw DimensionTooLarge("random subset scan capped at n = 12");
    rep.trials = trials;
    struct RBest {
        int delta = -1;
        std::uint64_t at_trial = 0;
        std::optional<VertexSet> witness;
        std::uint64_t tested = 0;
        std::vector<std::string> failures;
    };
    RBest total = parallel_reduce<RBest>(
        0, trials, jobs,
        [&](std::uint64_t lo, std::uint64_t hi) {
            RBest b;
            for (std::uint64_t t = lo; t < hi; ++t) {
                auto rng = trial_rng(seed, t);
                const auto idx32 =
                    sample_distinct(std::uint32_t(1) << n, std::uint32_t(picks), rng);
                VertexSet vs(n);
                for (auto v : idx32) vs.insert(v);
                const DegreeReport dr = induced_degrees(vs);
                if (b.delta < 0 || dr.delta_h < b.delta) {
                    b.delta = dr.delta_h;
                    b.at_trial = t;
                    b.witness = vs;
                }
                if (dr.delta_h < bound) b.failures.push_back(vs.to_hex());
                b.tested += 1;
            }
            return b;
        },
        [](RBest a, RBest b) {
            a.tested += b.tested;
            a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
            const bool take = a.delta < 0 ||
                              (b.delta >= 0 && (b.delta < a.delta ||
                                                (b.delta == a.delta && b.at_trial < a.at_trial)));
            if (take && b.delta >= 0) {
                a.delta = b.delta;
                a.at_trial = b.at_trial;
                a.witness = std::move(b.witness);
            }
            return a;
        });
    rep.tested = total.tested;
    rep.min_delta = total.delta;
    rep.witness = std::move(total.witness);
    rep.failures = std::move(total.failures);
    return rep;
}

// lambda_1 of the principal submatrix of the signed cube matrix indexed by H.
// Callers assert result >= sqrt(n) - tol and result <= max degree + tol.
inline double spectral_certificate(const VertexSet& h, const SignedMatrix& cube_matrix,
                                   double tol = kDefaultPowerTol) {
    const int n = h.cube_dim();
    if (n < 1) throw InvalidParams("certificate needs n >= 1");
    if (h.cardinality() != (std::uint64_t(1) << (n - 1)) + 1)
        throw InvalidParams("certificate expects |H| = 2^{n-1} + 1");
    const auto idx = h.to_indices();
    std::vector<std::uint32_t> keep(idx.begin(), idx.end());
    return lambda_max(principal_submatrix(cube_matrix, keep), tol);
}

inline double spectral_certificate(const VertexSet& h, double tol = kDefaultPowerTol) {
    return spectral_certificate(h, build_signed_cube(h.cube_dim()), tol);
}

namespace detail {

// Trim `side` down to `target` vertices by repeatedly deleting a vertex of
// maximum induced degree (ties at the lowest index). Deleting never raises
// any degree, so the final max degree is at most the starting one.
inline VertexSet trim_to_size(VertexSet side, std::uint64_t target) {
    const int n = side.cube_dim();
    std::vector<int> deg(side.size(), 0);
    for (std::uint64_t v = 0; v < side.size(); ++v)
        if (side.contains(v)) {
            int d = 0;
            for (int i = 0; i < n; ++i) d += side.contains(v ^ (std::uint64_t(1) << i));
            deg[v] = d;
        }
    std::uint64_t have = side.cardinality();
    while (have > target) {
        std::uint64_t pick = 0;
        int best = -1;
        for (std::uint64_t v = 0; v < side.size(); ++v)
            if (side.contains(v) && deg[v] > best) {
                best = deg[v];
                pick = v;
            }
        side.erase(pick);
        deg[pick] = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t u = pick ^ (std::uint64_t(1) << i);
            if (side.contains(u)) deg[u]--;
        }
        --have;
    }
    return side;
}

} // namespace detail

// A (2^{n-1}+1)-vertex induced subgraph with max degree exactly sqrt(n), for
// perfect squares n. n = 1 and 4 come from direct search; n = 9 and 16 from
// the AND-of-ORs side of the boolean correspondence, trimmed down: both sides
// have max degree <= sqrt(n), and the degree theorem pins it from below.
inline VertexSet find_tight_witness(int n) {
    const int root = int_ceil_sqrt(n);
    if (n < 1 || root * root != n)
        throw InvalidParams("tight witnesses exist for perfect squares only");

    if (n == 1) return VertexSet::from_indices(1, {0, 1});

    if (n == 4) {
        // scan 9-subsets of Q^4 for one with max degree 2
        const auto rep = scan_min_degree(4, Mode::exhaustive);
        if (rep.min_delta == 2 && rep.witness) return *rep.witness;
        throw NotFound("no tight 9-vertex witness found in Q^4");
    }

    if (n > 16) throw NotFound("tight witness construction supports n in {1, 4, 9, 16}");

    const GLInstance inst = gl_map(make_and_of_ors(root));
    const std::uint64_t target = (std::uint64_t(1) << (n - 1)) + 1;
    VertexSet side = inst.h_size >= target ? inst.h_set : inst.h_set.complement();
    if (side.cardinality() < target) throw NotFound("correspondence side too small to trim");
    VertexSet trimmed = detail::trim_to_size(std::move(side), target);
    const DegreeReport dr = induced_degrees(trimmed);
    if (dr.delta_h != root)
        throw NotFound("trimmed witness has degree " + std::to_string(dr.delta_h) +
                       ", expected " + std::to_string(root));
    return trimmed;
}

// Bounds on g(n, k): the least t such that every t-vertex induced subgraph of
// Q^n has max degree >= k. Exact branch-and-bound for n <= 5; randomized
// local search plus the degree-theorem upper bound beyond that.
struct GBounds {
    int n = 0;
    int k = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    bool exact = false;
    bool budget_exhausted = false;
    std::uint64_t seed = 0;
    std::optional<VertexSet> witness; // largest found S with max degree < k
};

namespace detail {

// Max |S| over S in Q^n (<= 32 vertices) with every member's degree in S at
// most d. Include/exclude branch-and-bound seeded with the even vertices.
class BoundedDegreeSearch {
public:
    BoundedDegreeSearch(int n, int d) : n_(n), d_(d), vcount_(1u << n) {
        nbr_.resize(vcount_);
        for (std::uint32_t v = 0; v < vcount_; ++v)
            for (int i = 0; i < n_; ++i) nbr_[v] |= std::uint32_t(1) << (v ^ (1u << i));
        best_mask_ = 0;
        for (std::uint32_t v = 0; v < vcount_; ++v)
            if ((std::popcount(v) & 1) == 0) best_mask_ |= std::uint32_t(1) << v;
        best_ = std::popcount(best_mask_);
        deg_.assign(vcount_, 0);
    }

    std::uint32_t run() {
        dfs(0, 0, 0);
        return best_mask_;
    }
    int best_size() const { return best_; }

private:
    void dfs(std::uint32_t idx, std::uint32_t chosen, int count) {
        if (count + int(vcount_ - idx) <= best_) return;
        if (idx == vcount_) {
            if (count > best_) {
                best_ = count;
                best_mask_ = chosen;
            }
            return;
        }
        const std::uint32_t cn = nbr_[idx] & chosen;
        if (std::popcount(cn) <= d_) {
            bool ok = true;
            for (std::uint32_t m = cn; m; m &= m - 1)
                if (deg_[std::uint32_t(std::countr_zero(m))] >= d_) {
                    ok = false;
                    break;
                }
            if (ok) {
                deg_[idx] = std::popcount(cn);
                for (std::uint32_t m = cn; m; m &= m - 1) deg_[std::countr_zero(m)]++;
                dfs(idx + 1, chosen | (std::uint32_t(1) << idx), count + 1);
                for (std::uint32_t m = cn; m; m &= m - 1) deg_[std::countr_zero(m)]--;
                deg_[idx] = 0;
            }
        }
        dfs(idx + 1, chosen, count);
    }

    int n_, d_;
    std::uint32_t vcount_;
    std::vector<std::uint32_t> nbr_;
    std::vector<int> deg_;
    std::uint32_t best_mask_;
    int best_;
};

} // namespace detail

inline GBounds explore_g(int n, int k, std::uint64_t budget = 200000, std::uint64_t seed = 0) {
    if (n < 1 || n > 16) throw InvalidParams("explore_g supports 1 <= n <= 16");
    if (k < 1 || k > n) throw InvalidParams("explore_g needs 1 <= k <= n");
    GBounds g;
    g.n = n;
    g.k = k;
    g.seed = seed;

    const std::uint64_t half = std::uint64_t(1) << (n - 1);

    if (n <= 5) {
        detail::BoundedDegreeSearch search(n, k - 1);
        const std::uint32_t mask = search.run();
        std::vector<std::uint64_t> idx;
        for (std::uint32_t m = mask; m; m &= m - 1) idx.push_back(std::countr_zero(m));
        g.witness = VertexSet::from_indices(n, idx);
        g.lower = g.upper = std::uint64_t(search.best_size()) + 1;
        g.exact = true;
        return g;
    }

    // Heuristic: grow a max-degree-(k-1) set by random insertions with
    // occasional random kicks; every found set of size M proves g > M.
    const std::uint64_t vcount = std::uint64_t(1) << n;
    VertexSet cur = VertexSet::even_vertices(n);
    std::vector<int> deg(vcount, 0);
    std::uint64_t cur_size = half;
    VertexSet best = cur;
    std::uint64_t best_size = cur_size;

    auto addable = [&](std::uint64_t v) {
        if (cur.contains(v)) return false;
        int d = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t u = v ^ (std::uint64_t(1) << i);
            if (cur.contains(u)) {
                if (deg[u] >= k - 1) return false;
                ++d;
            }
        }
        return d <= k - 1;
    };
    auto add = [&](std::uint64_t v) {
        cur.insert(v);
        int d = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t u = v ^ (std::uint64_t(1) << i);
            if (cur.contains(u)) {
                ++deg[u];
                ++d;
            }
        }
        deg[v] = d;
        ++cur_size;
    };

    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_int_distribution<std::uint64_t> pick(0, vcount - 1);
    const std::uint64_t upper_by_theorem = (k <= int_ceil_sqrt(n)) ? half + 1 : vcount;
    std::uint64_t stall = 0;
    for (std::uint64_t it = 0; it < budget; ++it) {
        if (best_size + 1 >= upper_by_theorem) break; // bounds already meet
        const std::uint64_t v = pick(rng);
        if (addable(v)) {
            add(v);
            stall = 0;
            if (cur_size > best_size) {
                best_size = cur_size;
                best = cur;
            }
        } else if (++stall >= 64 && cur_size > 0) {
            // kick: drop a random member
            std::uint64_t w = pick(rng);
            for (std::uint64_t probe = 0; probe < vcount; ++probe, w = (w + 1) & (vcount - 1))
                if (cur.contains(w)) break;
            cur.erase(w);
            --cur_size;
            deg[w] = 0;
            for (int i = 0; i < n; ++i) {
                const std::uint64_t u = w ^ (std::uint64_t(1) << i);
                if (cur.contains(u)) --deg[u];
            }
            stall = 0;
        }
    }

    g.witness = best;
    g.lower = best_size + 1;
    g.upper = upper_by_theorem;
    g.exact = g.lower == g.upper;
    g.budget_exhausted = !g.exact;
    return g;
}

} // namespace cubesense
