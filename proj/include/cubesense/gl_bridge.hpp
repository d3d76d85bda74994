#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cubesense/gallery.hpp"
#include "cubesense/measures.hpp"
#include "cubesense/parallel.hpp"
#include "cubesense/rng.hpp"
#include "cubesense/truth_table.hpp"
#include "cubesense/vertex_set.hpp"

namespace cubesense {

enum class Mode { exhaustive, random };

inline const char* mode_name(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "random"; }

// The boolean-function <-> induced-subgraph carrier: H = {x : f(x) != parity(x)}.
// Under this pairing the degree of x inside its own side equals the local
// sensitivity s(f, x), which is what makes Gamma(H) = s(f).
struct GLInstance {
    TruthTable f;
    VertexSet h_set;
    std::uint64_t h_size = 0;
    std::uint64_t complement_size = 0;
};

inline GLInstance gl_map(const TruthTable& f) {
    const int n = f.vars();
    GLInstance inst{f, VertexSet(n)};
    for (std::uint64_t x = 0; x < f.size(); ++x)
        if (f.get(x) != bool(std::popcount(x) & 1)) inst.h_set.insert(x);
    inst.h_size = inst.h_set.cardinality();
    inst.complement_size = f.size() - inst.h_size;

    // within-side degree must equal local sensitivity, pointwise
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const bool side = inst.h_set.contains(x);
        int d = 0;
        for (int i = 0; i < n; ++i)
            d += inst.h_set.contains(x ^ (std::uint64_t(1) << i)) == side;
        if (d != local_sensitivity(f, x))
            throw Error("gl_map: degree/sensitivity identity violated at x=" +
                        std::to_string(x) + " for f=" + f.to_hex());
    }
    return inst;
}

struct GLReport {
    std::string theorem = "gl";
    int n = 0;
    std::string mode;
    std::uint64_t tested = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

// Checks one function against the correspondence:
//   (i)  Gamma(H) == s(f)
//   (ii) |H| != 2^{n-1}  iff  deg(f) == n
//   (iii) if deg(f) == n then Gamma(H)^2 >= n
inline void gl_check_one(const TruthTable& f, std::vector<std::string>& failures) {
    const int n = f.vars();
    const GLInstance inst = gl_map(f);
    const DegreeReport deg_rep = induced_degrees(inst.h_set);
    const int s = sensitivity(f);
    const int d = degree(f);

    if (deg_rep.gamma != s)
        failures.push_back("f=" + f.to_hex() + " gamma=" + std::to_string(deg_rep.gamma) +
                           " != s=" + std::to_string(s));
    const bool unbalanced = inst.h_size != f.size() / 2;
    if (unbalanced != (d == n))
        failures.push_back("f=" + f.to_hex() + " |H|=" + std::to_string(inst.h_size) +
                           " inconsistent with deg=" + std::to_string(d));
    if (d == n && std::int64_t(deg_rep.gamma) * deg_rep.gamma < n)
        failures.push_back("f=" + f.to_hex() + " gamma=" + std::to_string(deg_rep.gamma) +
                           " below sqrt(n)");
}

inline TruthTable table_from_bits(int n, std::uint64_t bits) {
    TruthTable f(n);
    f.words()[0] = bits;
    f.mask_tail();
    return f;
}

} // namespace detail

// Exhaustive over all 2^(2^n) functions (n <= 4) or seeded random sampling
// (n <= 10). Exhaustive sweeps skip one member of every complement pair
// {f, 1-f}: all checked quantities are invariant under complement, so each
// processed table accounts for two.
inline GLReport verify_gl(int n, Mode mode, std::uint64_t trials = 0, std::uint64_t seed = 0,
                          unsigned jobs = 0) {
    GLReport rep;
    rep.n = n;
    rep.mode = mode_name(mode);
    rep.seed = seed;

    struct Acc {
        std::uint64_t tested = 0;
        std::vector<std::string> failures;
    };
    auto merge = [](Acc a, Acc b) {
        a.tested += b.tested;
        a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
        return a;
    };

    if (mode == Mode::exhaustive) {
        if (n > 4) throw DimensionTooLarge("exhaustive sweep capped at n = 4");
        if (n < 0) throw InvalidParams("n must be non-negative");
        const std::uint64_t tables = std::uint64_t(1) << (std::uint64_t(1) << n);
        const std::uint64_t full = tables - 1;
        Acc total = parallel_reduce<Acc>(
            0, tables, jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Acc acc;
                for (std::uint64_t bits = lo; bits < hi; ++bits) {
                    if ((bits ^ full) < bits) continue; // complement already covered
                    detail::gl_check_one(detail::table_from_bits(n, bits), acc.failures);
                    acc.tested += 2;
                }
                return acc;
            },
            merge);
        rep.tested = total.tested;
        rep.failures = std::move(total.failures);
    } else {
        if (n > 10) throw DimensionTooLarge("random sweep capped at n = 10");
        rep.trials = trials;
        Acc total = parallel_reduce<Acc>(
            0, trials, jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Acc acc;
                for (std::uint64_t t = lo; t < hi; ++t) {
                    auto rng = trial_rng(seed, t);
                    detail::gl_check_one(make_random(n, rng()), acc.failures);
                    acc.tested += 1;
                }
                return acc;
            },
            merge);
        rep.tested = total.tested;
        rep.failures = std::move(total.failures);
    }
    return rep;
}

struct SweepReport {
    std::string theorem;
    int n = 0; // largest n swept
    std::string mode;
    std::uint64_t tested = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;
    // functions with s^2 == deg == n at the top sweep dimension
    std::vector<std::string> tight_witnesses;
    std::uint64_t tight_total = 0; // all equality cases seen, any degree
    double extremal_ratio = 0.0;   // max bs / s^2 over swept f with s >= 1
    std::string extremal_witness;

    bool passed() const { return failures.empty(); }
};

// s(f)^2 >= deg(f) for every function, integer-exact. Exhaustive for n <= 4;
// for 5 <= n <= n_max, `trials` seeded random tables per dimension. Tight
// witnesses (s^2 == deg == n) are recorded at the top dimension only.
inline SweepReport verify_sensitivity_degree(int n_max, std::uint64_t trials = 1000,
                                             std::uint64_t seed = 0, unsigned jobs = 0) {
    if (n_max < 0 || n_max > 12) throw InvalidParams("n_max must be in [0, 12]");
    SweepReport rep;
    rep.theorem = "sdeg";
    rep.n = n_max;
    rep.mode = n_max <= 4 ? "exhaustive" : "exhaustive+random";
    rep.seed = seed;

    struct Acc {
        std::uint64_t tested = 0;
        std::uint64_t tight_total = 0;
        std::vector<std::string> failures;
        std::vector<std::string> tights;
    };
    auto merge = [](Acc a, Acc b) {
        a.tested += b.tested;
        a.tight_total += b.tight_total;
        a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
        a.tights.insert(a.tights.end(), b.tights.begin(), b.tights.end());
        return a;
    };
    auto take = [&](Acc&& total) {
        rep.tested += total.tested;
        rep.tight_total += total.tight_total;
        rep.failures.insert(rep.failures.end(), total.failures.begin(), total.failures.end());
        rep.tight_witnesses.insert(rep.tight_witnesses.end(), total.tights.begin(),
                                   total.tights.end());
    };

    for (int n = 0; n <= std::min(n_max, 4); ++n) {
        const std::uint64_t tables = std::uint64_t(1) << (std::uint64_t(1) << n);
        const std::uint64_t full = tables - 1;
        const bool top = n == n_max;
        take(parallel_reduce<Acc>(
            0, tables, jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Acc acc;
                for (std::uint64_t bits = lo; bits < hi; ++bits) {
                    if ((bits ^ full) < bits) continue; // complement already covered
                    const TruthTable f = detail::table_from_bits(n, bits);
                    const int s = sensitivity(f);
                    const int d = degree(f);
                    if (std::int64_t(s) * s < d)
                        acc.failures.push_back("f=" + f.to_hex() + " s=" + std::to_string(s) +
                                               " deg=" + std::to_string(d));
                    if (std::int64_t(s) * s == d) {
                        acc.tight_total += 2; // f and its complement
                        if (top && d == n) {
                            acc.tights.push_back(f.to_hex());
                            acc.tights.push_back(detail::table_from_bits(n, bits ^ full).to_hex());
                        }
                    }
                    acc.tested += 2;
                }
                return acc;
            },
            merge));
    }

    for (int n = 5; n <= n_max; ++n) {
        rep.trials = trials;
        const bool top = n == n_max;
        take(parallel_reduce<Acc>(
            0, trials, jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Acc acc;
                for (std::uint64_t t = lo; t < hi; ++t) {
                    auto rng = trial_rng(seed ^ (std::uint64_t(n) << 32), t);
                    const TruthTable f = make_random(n, rng());
                    const int s = sensitivity(f);
                    const int d = degree(f);
                    if (std::int64_t(s) * s < d)
                        acc.failures.push_back("f=" + f.to_hex() + " s=" + std::to_string(s) +
                                               " deg=" + std::to_string(d));
                    if (std::int64_t(s) * s == d) {
                        acc.tight_total += 1;
                        if (top && d == n) acc.tights.push_back(f.to_hex());
                    }
                    acc.tested += 1;
                }
                return acc;
            },
            merge));
    }
    return rep;
}

// The quartic chain at desk scale: bs <= deg^2, bs <= 2 deg^2, bs <= s^4,
// bs >= s, and s = 0 iff bs = 0, for every function on up to n_max <= 4
// variables. Also records the extremal bs / s^2 ratio seen.
inline SweepReport verify_bs_chain(int n_max, unsigned jobs = 0) {
    if (n_max < 0 || n_max > 4)
        throw InvalidParams("bs chain sweep is exhaustive-only and capped at n_max = 4");
    SweepReport rep;
    rep.theorem = "bschain";
    rep.n = n_max;
    rep.mode = "exhaustive";

    struct Acc {
        std::uint64_t tested = 0;
        std::vector<std::string> failures;
        // ratio as exact fraction bs / s^2
        std::int64_t num = 0, den = 1;
        std::string witness;
    };
    auto better = [](std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
        return an * bd > bn * ad;
    };
    auto merge = [&](Acc a, Acc b) {
        a.tested += b.tested;
        a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
        if (better(b.num, b.den, a.num, a.den)) {
            a.num = b.num;
            a.den = b.den;
            a.witness = b.witness;
        }
        return a;
    };

    std::int64_t best_num = 0, best_den = 1;
    for (int n = 0; n <= n_max; ++n) {
        const std::uint64_t tables = std::uint64_t(1) << (std::uint64_t(1) << n);
        const std::uint64_t full = tables - 1;
        Acc total = parallel_reduce<Acc>(
            0, tables, jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Acc acc;
                for (std::uint64_t bits = lo; bits < hi; ++bits) {
                    if ((bits ^ full) < bits) continue; // complement already covered
                    const TruthTable f = detail::table_from_bits(n, bits);
                    const int s = sensitivity(f);
                    const int bs = block_sensitivity(f);
                    const int d = degree(f);
                    const auto hex = f.to_hex();
                    if (std::int64_t(bs) > std::int64_t(d) * d)
                        acc.failures.push_back("f=" + hex + " bs > deg^2");
                    if (std::int64_t(bs) > 2 * std::int64_t(d) * d)
                        acc.failures.push_back("f=" + hex + " bs > 2 deg^2");
                    if (std::int64_t(bs) > std::int64_t(s) * s * s * s)
                        acc.failures.push_back("f=" + hex + " bs > s^4");
                    if (bs < s) acc.failures.push_back("f=" + hex + " bs < s");
                    if ((s == 0) != (bs == 0))
                        acc.failures.push_back("f=" + hex + " s/bs zero mismatch");
                    if (s >= 1 && better(bs, std::int64_t(s) * s, acc.num, acc.den)) {
                        acc.num = bs;
                        acc.den = std::int64_t(s) * s;
                        acc.witness = hex;
                    }
                    acc.tested += 2;
                }
                return acc;
            },
            merge);
        rep.tested += total.tested;
        rep.failures.insert(rep.failures.end(), total.failures.begin(), total.failures.end());
        if (better(total.num, total.den, best_num, best_den)) {
            best_num = total.num;
            best_den = total.den;
            rep.extremal_witness = total.witness;
        }
    }
    rep.extremal_ratio = double(best_num) / double(best_den);
    return rep;
}

} // namespace cubesense
