#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cubesense/dense_graph.hpp"
#include "cubesense/errors.hpp"

namespace cubesense {

// Symmetric matrix with entries in {-1, 0, +1} and zero diagonal, stored as
// CSR with both orientations of every entry. Immutable once built.
class SignedMatrix {
public:
    class Builder {
    public:
        explicit Builder(int dim) : dim_(dim) {
            if (dim <= 0) throw InvalidParams("matrix dimension must be positive");
        }

        // Records A[u][v] = A[v][u] = value.
        Builder& add(int u, int v, int value) {
            if (u < 0 || u >= dim_ || v < 0 || v >= dim_)
                throw IndexOutOfRange("entry index out of range");
            if (u == v) throw InvalidParams("diagonal entries must stay zero");
            if (value != 1 && value != -1) throw InvalidParams("entries must be +1 or -1");
            entries_.emplace_back(u, v, std::int8_t(value));
            entries_.emplace_back(v, u, std::int8_t(value));
            return *this;
        }

        SignedMatrix build() {
            SignedMatrix m;
            m.dim_ = dim_;
            std::sort(entries_.begin(), entries_.end(),
                      [](const auto& a, const auto& b) {
                          return std::tie(std::get<0>(a), std::get<1>(a)) <
                                 std::tie(std::get<0>(b), std::get<1>(b));
                      });
            m.row_ptr_.assign(std::size_t(dim_) + 1, 0);
            m.cols_.reserve(entries_.size());
            m.vals_.reserve(entries_.size());
            int last_u = -1, last_v = -1;
            for (const auto& [u, v, val] : entries_) {
                if (u == last_u && v == last_v)
                    throw InvalidParams("duplicate entry (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
                last_u = u;
                last_v = v;
                m.cols_.push_back(std::uint32_t(v));
                m.vals_.push_back(val);
                m.row_ptr_[std::size_t(u) + 1]++;
            }
            for (std::size_t r = 0; r < std::size_t(dim_); ++r)
                m.row_ptr_[r + 1] += m.row_ptr_[r];
            return m;
        }

    private:
        int dim_;
        std::vector<std::tuple<int, int, std::int8_t>> entries_;
    };

    int dim() const { return dim_; }

    // Number of stored (directed) entries; twice the edge count.
    std::size_t stored_entries() const { return cols_.size(); }

    int entry(int u, int v) const {
        if (u < 0 || u >= dim_ || v < 0 || v >= dim_)
            throw IndexOutOfRange("entry index out of range");
        const auto b = cols_.begin() + row_begin(u);
        const auto e = cols_.begin() + row_end(u);
        const auto it = std::lower_bound(b, e, std::uint32_t(v));
        if (it == e || *it != std::uint32_t(v)) return 0;
        return vals_[std::size_t(it - cols_.begin())];
    }

    std::size_t row_begin(int u) const { return row_ptr_[std::size_t(u)]; }
    std::size_t row_end(int u) const { return row_ptr_[std::size_t(u) + 1]; }
    std::uint32_t col_at(std::size_t k) const { return cols_[k]; }
    int val_at(std::size_t k) const { return vals_[k]; }

    template <class F>
    void for_row(int u, F&& fn) const {
        for (std::size_t k = row_begin(u); k < row_end(u); ++k) fn(int(cols_[k]), int(vals_[k]));
    }

    // Gershgorin radius: max over rows of the absolute row sum.
    int max_abs_row_sum() const {
        std::size_t best = 0;
        for (int u = 0; u < dim_; ++u) best = std::max(best, row_end(u) - row_begin(u));
        return int(best);
    }

    std::vector<double> to_dense() const {
        std::vector<double> a(std::size_t(dim_) * dim_, 0.0);
        for (int u = 0; u < dim_; ++u)
            for_row(u, [&](int v, int val) { a[std::size_t(u) * dim_ + v] = double(val); });
        return a;
    }

    // y = A x
    void multiply(std::span<const double> x, std::span<double> y) const {
        for (int u = 0; u < dim_; ++u) {
            double acc = 0.0;
            for (std::size_t k = row_begin(u); k < row_end(u); ++k)
                acc += double(vals_[k]) * x[cols_[k]];
            y[std::size_t(u)] = acc;
        }
    }

    // Dump format: header "dim nnz", then one "row col value" line per upper
    // triangle entry (row < col; symmetry implied), rows ascending.
    std::string dump() const {
        std::ostringstream out;
        out << dim_ << ' ' << stored_entries() / 2 << '\n';
        for (int u = 0; u < dim_; ++u)
            for (std::size_t k = row_begin(u); k < row_end(u); ++k)
                if (cols_[k] > std::uint32_t(u))
                    out << u << ' ' << cols_[k] << ' ' << int(vals_[k]) << '\n';
        return out.str();
    }

    static SignedMatrix parse_dump(std::istream& in) {
        long long dim = 0, nnz = 0;
        if (!(in >> dim >> nnz)) throw ParseError("matrix dump: bad header");
        if (dim <= 0 || nnz < 0) throw ParseError("matrix dump: bad header values");
        Builder b(int(dim));
        for (long long k = 0; k < nnz; ++k) {
            long long u = 0, v = 0, val = 0;
            if (!(in >> u >> v >> val)) throw ParseError("matrix dump: truncated entry list");
            if (u >= v) throw ParseError("matrix dump: entries must have row < col");
            if (u < 0 || v >= dim) throw ParseError("matrix dump: index out of range");
            if (val != 1 && val != -1) throw ParseError("matrix dump: value must be +1 or -1");
            b.add(int(u), int(v), int(val));
        }
        return b.build();
    }

    static SignedMatrix parse_dump(const std::string& text) {
        std::istringstream in(text);
        return parse_dump(in);
    }

private:
    SignedMatrix() = default;

    int dim_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> cols_;
    std::vector<std::int8_t> vals_;
};

namespace detail {

// Recursive block fill: the low-order (n-1)-subcube appears twice, negated in
// the half whose top bit is 1, and the two halves are joined by +1 entries on
// the perfect matching along the top coordinate.
inline void fill_signed_cube(SignedMatrix::Builder& b, int n, int base, int sign) {
    if (n == 1) {
        b.add(base, base + 1, sign);
        return;
    }
    const int half = 1 << (n - 1);
    fill_signed_cube(b, n - 1, base, sign);
    fill_signed_cube(b, n - 1, base + half, -sign);
    for (int u = 0; u < half; ++u) b.add(base + u, base + half + u, sign);
}

} // namespace detail

// The signed cube matrix: 2^n x 2^n, entries in {-1, 0, +1}, support equal to
// the Q^n adjacency pattern, and square exactly n * I. Vertex u is row u; bit
// n-1 of u selects the recursive block (0 = plain copy, 1 = negated copy).
inline SignedMatrix build_signed_cube(int n) {
    if (n < 1) throw InvalidParams("signed cube matrix needs n >= 1");
    if (n > 20) throw DimensionTooLarge("signed cube matrix capped at n = 20");
    SignedMatrix::Builder b(1 << n);
    detail::fill_signed_cube(b, n, 0, +1);
    return b.build();
}

// Rows and columns restricted to `keep` (ascending, no duplicates),
// order-preserving.
inline SignedMatrix principal_submatrix(const SignedMatrix& a, std::span<const std::uint32_t> keep) {
    if (keep.empty()) throw EmptySelection("principal submatrix needs a nonempty index set");
    std::vector<std::int32_t> where(std::size_t(a.dim()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= std::uint32_t(a.dim())) throw IndexOutOfRange("submatrix index out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw InvalidParams("index set must be strictly ascending");
        where[keep[i]] = std::int32_t(i);
    }
    SignedMatrix::Builder b(int(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        a.for_row(int(keep[i]), [&](int v, int val) {
            const std::int32_t j = where[std::size_t(v)];
            if (j >= 0 && std::int32_t(i) < j) b.add(int(i), int(j), val);
        });
    }
    return b.build();
}

struct SquareIdentityCertificate {
    int n = 0;
    bool identity_holds = false; // A*A == n*I, exact integer arithmetic
    std::int64_t trace = 0;      // exact trace of A
    bool trace_zero = false;
    // When both hold, the spectrum is forced to {+sqrt(n), -sqrt(n)} with
    // equal multiplicities dim/2, with no floating point involved.
    double eigenvalue_magnitude = 0.0;
    std::uint64_t multiplicity_each = 0;

    bool certified() const { return identity_holds && trace_zero; }
};

inline SquareIdentityCertificate square_identity_certificate(const SignedMatrix& a, int n) {
    SquareIdentityCertificate cert;
    cert.n = n;
    cert.trace = 0; // zero diagonal by construction
    cert.trace_zero = true;

    const int dim = a.dim();
    std::vector<std::int64_t> acc(std::size_t(dim), 0);
    std::vector<char> seen(std::size_t(dim), 0);
    std::vector<int> touched;
    touched.reserve(64);
    bool ok = true;
    for (int u = 0; u < dim && ok; ++u) {
        touched.clear();
        a.for_row(u, [&](int v, int uv) {
            a.for_row(v, [&](int w, int vw) {
                if (!seen[std::size_t(w)]) {
                    seen[std::size_t(w)] = 1;
                    touched.push_back(w);
                }
                acc[std::size_t(w)] += std::int64_t(uv) * vw;
            });
        });
        // row u of A*A must be n at column u and 0 elsewhere
        bool diag_touched = false;
        for (int w : touched) {
            const std::int64_t want = (w == u) ? n : 0;
            if (acc[std::size_t(w)] != want) ok = false;
            if (w == u) diag_touched = true;
            acc[std::size_t(w)] = 0;
            seen[std::size_t(w)] = 0;
        }
        if (!diag_touched && n != 0) ok = false;
    }
    cert.identity_holds = ok;
    if (cert.certified()) {
        cert.eigenvalue_magnitude = std::sqrt(double(n));
        cert.multiplicity_each = std::uint64_t(dim) / 2;
    }
    return cert;
}

inline bool verify_square_identity(const SignedMatrix& a, int n) {
    return square_identity_certificate(a, n).identity_holds;
}

// True iff every nonzero entry of A lies on an edge of H.
inline bool check_support(const SignedMatrix& a, const DenseGraph& h) {
    if (a.dim() != h.size()) throw DimensionMismatch("matrix and graph sizes differ");
    for (int u = 0; u < a.dim(); ++u) {
        bool ok = true;
        a.for_row(u, [&](int v, int) { ok = ok && h.has_edge(u, v); });
        if (!ok) return false;
    }
    return true;
}

} // namespace cubesense
