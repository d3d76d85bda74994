#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cubesense/errors.hpp"
#include "cubesense/rng.hpp"
#include "cubesense/truth_table.hpp"

namespace cubesense {

inline TruthTable make_parity(int n) {
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x)
        if (std::popcount(x) & 1) t.set(x, true);
    return t;
}

inline TruthTable make_and(int n) {
    TruthTable t(n);
    t.set(t.size() - 1, true); // empty AND is 1
    return t;
}

inline TruthTable make_or(int n) {
    TruthTable t(n);
    for (std::uint64_t x = 1; x < t.size(); ++x) t.set(x, true);
    return t;
}

inline TruthTable make_constant(int n, bool value) {
    TruthTable t(n);
    if (value)
        for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, true);
    return t;
}

// AND of m ORs over m disjoint blocks; block j owns coordinates jm..jm+m-1,
// so n = m^2. Sensitivity m and degree m^2.
inline TruthTable make_and_of_ors(int m) {
    if (m < 1 || m * m > TruthTable::kMaxVars)
        throw InvalidParams("and_of_ors: need 1 <= m and m^2 <= " +
                            std::to_string(TruthTable::kMaxVars));
    const int n = m * m;
    TruthTable t(n);
    const std::uint64_t block = (std::uint64_t(1) << m) - 1;
    for (std::uint64_t x = 0; x < t.size(); ++x) {
        bool all = true;
        for (int j = 0; j < m && all; ++j)
            all = ((x >> (j * m)) & block) != 0;
        t.set(x, all);
    }
    return t;
}

inline TruthTable make_random(int n, std::uint64_t seed) {
    TruthTable t(n);
    std::mt19937_64 rng(splitmix64(seed));
    for (auto& w : t.words()) w = rng();
    t.mask_tail();
    return t;
}

struct GalleryParams {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<std::uint64_t> seed;
};

// Name-based dispatch used by the CLI. Deterministic for fixed params.
inline TruthTable gallery(std::string_view name, const GalleryParams& p) {
    auto need_n = [&]() {
        if (!p.n) throw InvalidParams(std::string(name) + ": parameter n required");
        return *p.n;
    };
    if (name == "parity") return make_parity(need_n());
    if (name == "and") return make_and(need_n());
    if (name == "or") return make_or(need_n());
    if (name == "constant0") return make_constant(need_n(), false);
    if (name == "constant1") return make_constant(need_n(), true);
    if (name == "and_of_ors") {
        if (!p.m) throw InvalidParams("and_of_ors: parameter m required");
        return make_and_of_ors(*p.m);
    }
    if (name == "random") {
        if (!p.seed) throw InvalidParams("random: parameter seed required");
        return make_random(need_n(), *p.seed);
    }
    throw UnknownGenerator("no generator named '" + std::string(name) + "'");
}

} // namespace cubesense
