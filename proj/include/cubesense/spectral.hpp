#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "cubesense/dense_graph.hpp"
#include "cubesense/errors.hpp"
#include "cubesense/signed_matrix.hpp"

namespace cubesense {

constexpr int kMaxDenseDim = 1024;
constexpr double kDefaultEigTol = 1e-10;
constexpr double kDefaultPowerTol = 1e-9;
constexpr int kPowerIterationCap = 100000;

// Eigenvalues sorted descending plus the tolerance certified by the solver:
// every value is within tol of a true eigenvalue.
struct Spectrum {
    std::vector<double> values;
    double tol = 0.0;
};

namespace detail {

inline double offdiag_norm(const std::vector<double>& a, int dim) {
    double s = 0.0;
    for (int p = 0; p < dim; ++p)
        for (int q = p + 1; q < dim; ++q) {
            const double v = a[std::size_t(p) * dim + q];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

} // namespace detail

// All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
// Sweeps until the off-diagonal Frobenius norm is below tol; by Weyl's
// inequality the sorted diagonal is then within tol of the true spectrum.
inline Spectrum full_spectrum(std::vector<double> a, int dim, double tol = kDefaultEigTol) {
    if (dim < 1) throw InvalidParams("spectrum of an empty matrix");
    if (dim > kMaxDenseDim)
        throw DimensionTooLarge("dense eigensolver capped at dim = " +
                                std::to_string(kMaxDenseDim));
    if (tol <= 0) throw InvalidParams("tolerance must be positive");
    if (a.size() != std::size_t(dim) * dim) throw DimensionMismatch("matrix buffer size mismatch");

    auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * dim + j]; };

    const int max_sweeps = 64;
    int sweep = 0;
    while (detail::offdiag_norm(a, dim) > tol) {
        if (++sweep > max_sweeps) throw ConvergenceFailure("jacobi sweeps exhausted");
        for (int p = 0; p < dim; ++p)
            for (int q = p + 1; q < dim; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // rotate rows/columns p and q
                for (int k = 0; k < dim; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < dim; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }

    Spectrum spec;
    spec.tol = tol;
    spec.values.resize(std::size_t(dim));
    for (int i = 0; i < dim; ++i) spec.values[std::size_t(i)] = at(i, i);
    std::sort(spec.values.begin(), spec.values.end(), std::greater<double>());
    return spec;
}

inline Spectrum full_spectrum(const SignedMatrix& a, double tol = kDefaultEigTol) {
    return full_spectrum(a.to_dense(), a.dim(), tol);
}

// Largest eigenvalue via power iteration on A + shift*I with the shift just
// above the Gershgorin radius, which makes the shifted matrix positive
// definite so its dominant eigenvalue is lambda_1 + shift even when
// lambda_1 = -lambda_min. Returns the Rayleigh quotient (never above
// lambda_1) once the residual |Av - rho v| drops below tol; falls back to the
// dense solver if the iteration stalls.
inline double lambda_max(const SignedMatrix& a, double tol = kDefaultPowerTol,
                         int max_iter = kPowerIterationCap) {
    if (tol <= 0) throw InvalidParams("tolerance must be positive");
    const int dim = a.dim();
    const double shift = double(a.max_abs_row_sum()) + 1.0;

    std::vector<double> v(std::size_t(dim)), av(std::size_t(dim));
    for (int i = 0; i < dim; ++i)
        v[std::size_t(i)] = 1.0 + 1e-6 * double(i % 8191); // deterministic start
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;

    for (int it = 0; it < max_iter; ++it) {
        a.multiply(v, av);
        double rho = 0.0;
        for (int i = 0; i < dim; ++i) rho += v[std::size_t(i)] * av[std::size_t(i)];
        double res = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double r = av[std::size_t(i)] - rho * v[std::size_t(i)];
            res += r * r;
        }
        if (std::sqrt(res) <= tol) return rho;
        // next iterate: (A + shift I) v, normalized
        double nn = 0.0;
        for (int i = 0; i < dim; ++i) {
            v[std::size_t(i)] = av[std::size_t(i)] + shift * v[std::size_t(i)];
            nn += v[std::size_t(i)] * v[std::size_t(i)];
        }
        nn = std::sqrt(nn);
        for (double& x : v) x /= nn;
    }

    if (dim <= kMaxDenseDim)
        return full_spectrum(a, std::min(tol, kDefaultEigTol)).values.front();
    throw ConvergenceFailure("power iteration hit the cap and the matrix is too large "
                             "for the dense fallback");
}

// Cauchy interlacing: with parent eigenvalues l_1 >= ... >= l_n and child
// (principal submatrix) eigenvalues m_1 >= ... >= m_m, checks
// l_i + slack >= m_i >= l_{i+n-m} - slack for all i.
inline bool check_interlacing(const Spectrum& parent, const Spectrum& child, double slack) {
    const std::size_t n = parent.values.size();
    const std::size_t m = child.values.size();
    if (m >= n) throw DimensionMismatch("child spectrum must be strictly smaller than parent");
    for (std::size_t i = 0; i < m; ++i) {
        if (parent.values[i] + slack < child.values[i]) return false;
        if (child.values[i] + slack < parent.values[i + n - m]) return false;
    }
    return true;
}

// Lemma-style degree bound: when A is supported on H's edges, the maximum
// degree of H dominates lambda_1(A).
inline bool check_degree_bound(const SignedMatrix& a, const DenseGraph& h,
                               double tol = kDefaultPowerTol) {
    if (a.dim() != h.size()) throw DimensionMismatch("matrix and graph sizes differ");
    return double(h.max_degree()) >= lambda_max(a, tol) - tol;
}

} // namespace cubesense
