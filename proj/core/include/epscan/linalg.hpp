#pragma once

// Small dense elimination kernels shared by the spectral, jordan and symmetry
// modules. Exact over Rational (any nonzero pivot, column order); over CplxF
// full pivoting with an absolute pivot threshold.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "epscan/matrix.hpp"
#include "epscan/poly.hpp"

namespace epscan::linalg {

template <class S>
using Rows = std::vector<std::vector<S>>;

template <class S>
struct Reduced {
    Rows<S> rows;                         // reduced row echelon form, pivots scaled to 1
    std::vector<std::size_t> pivot_cols;  // pivot column of row r for r < rank
    std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

template <class S>
bool negligible(const S& x, double threshold) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)threshold;
        return x.is_zero();
    } else {
        return x.abs() <= threshold;
    }
}

}  // namespace detail

/**
 * Row-reduce `rows` to reduced echelon form. Only the first `pivot_limit`
 * columns may hold pivots (the rest are carried along, e.g. a right-hand side).
 * For CplxF, entries with magnitude <= threshold are treated as zero.
 */
template <class S>
Reduced<S> rref(Rows<S> rows, std::size_t pivot_limit, double threshold = 0.0) {
    using Traits = ScalarTraits<S>;
    Reduced<S> out;
    const std::size_t m = rows.size();
    if (m == 0) return out;
    const std::size_t cols = rows.front().size();
    pivot_limit = std::min(pivot_limit, cols);
    std::vector<bool> used(pivot_limit, false);

    for (std::size_t r = 0; r < m; ++r) {
        std::size_t best_row = m;
        std::size_t best_col = pivot_limit;
        if constexpr (std::is_same_v<S, Rational>) {
            for (std::size_t c = 0; c < pivot_limit && best_row == m; ++c) {
                if (used[c]) continue;
                for (std::size_t i = r; i < m; ++i) {
                    if (!rows[i][c].is_zero()) {
                        best_row = i;
                        best_col = c;
                        break;
                    }
                }
            }
        } else {
            double best = threshold;
            for (std::size_t c = 0; c < pivot_limit; ++c) {
                if (used[c]) continue;
                for (std::size_t i = r; i < m; ++i) {
                    const double mag = rows[i][c].abs();
                    if (mag > best) {
                        best = mag;
                        best_row = i;
                        best_col = c;
                    }
                }
            }
        }
        if (best_row == m) break;

        std::swap(rows[r], rows[best_row]);
        used[best_col] = true;
        const S inv = Traits::exact_div(Traits::one(), rows[r][best_col]);
        for (auto& x : rows[r]) x = x * inv;
        rows[r][best_col] = Traits::one();
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const S f = rows[i][best_col];
            if (Traits::is_zero(f)) continue;
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
            rows[i][best_col] = Traits::zero();
        }
        out.pivot_cols.push_back(best_col);
    }
    out.rows = std::move(rows);
    return out;
}

template <class S>
Rows<S> to_rows(const Matrix<S>& a) {
    Rows<S> rows(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) rows[i].assign(a.row(i).begin(), a.row(i).end());
    return rows;
}

/// Rank of a set of vectors (as rows).
template <class S>
std::size_t rank(const Rows<S>& vectors, double threshold = 0.0) {
    if (vectors.empty()) return 0;
    return rref(vectors, vectors.front().size(), threshold).rank();
}

/// Basis of the null space, one vector per free column (free variable = 1).
template <class S>
std::vector<Vector<S>> nullspace(const Matrix<S>& a, double threshold = 0.0) {
    using Traits = ScalarTraits<S>;
    const std::size_t n = a.dim();
    const Reduced<S> red = rref(to_rows(a), n, threshold);
    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector<S> v(n, Traits::zero());
        v[f] = Traits::one();
        for (std::size_t r = 0; r < red.rank(); ++r) v[red.pivot_cols[r]] = Traits::zero() - red.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * A particular solution of a x = b with every free variable set to zero, or
 * nullopt when the system is inconsistent. `consistency` bounds the residual
 * right-hand side of zero rows (ignored for exact scalars).
 */
template <class S>
std::optional<Vector<S>> solve_particular(const Matrix<S>& a, std::span<const S> b,
                                          double threshold = 0.0, double consistency = 0.0) {
    using Traits = ScalarTraits<S>;
    const std::size_t n = a.dim();
    Rows<S> rows = to_rows(a);
    for (std::size_t i = 0; i < n; ++i) rows[i].push_back(b[i]);
    const Reduced<S> red = rref(std::move(rows), n, threshold);
    for (std::size_t r = red.rank(); r < n; ++r) {
        if (!detail::negligible(red.rows[r][n], consistency)) return std::nullopt;
    }
    Vector<S> x(n, Traits::zero());
    for (std::size_t r = 0; r < red.rank(); ++r) x[red.pivot_cols[r]] = red.rows[r][n];
    return x;
}

/// True if v lies in span(basis).
template <class S>
bool in_span(const std::vector<Vector<S>>& basis, const Vector<S>& v, double threshold = 0.0) {
    Rows<S> rows(basis.begin(), basis.end());
    const std::size_t before = rank(rows, threshold);
    rows.push_back(v);
    return rank(rows, threshold) == before;
}

/// Fraction-free (Bareiss) determinant; exact over any integral domain with
/// exact division (Rational, RatPoly).
template <class S>
S determinant(Matrix<S> a) {
    using Traits = ScalarTraits<S>;
    const std::size_t n = a.dim();
    S prev = Traits::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Traits::is_zero(a(k, k))) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!Traits::is_zero(a(i, k))) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == n) return Traits::zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = Traits::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
            a(i, k) = Traits::zero();
        }
        prev = a(k, k);
    }
    S det = a(n - 1, n - 1);
    return negate ? S(Traits::zero() - det) : det;
}

/// Scales a nonzero rational vector to coprime integers with the first
/// nonzero entry positive.
Vector<Rational> primitive_integer(const Vector<Rational>& v);

/// Scales a nonzero complex vector to unit 2-norm with the first
/// non-negligible entry real and positive.
Vector<CplxF> normalize_unit(const Vector<CplxF>& v);

/// Converts an exact vector to the floating backend.
Vector<CplxF> to_numeric(const Vector<Rational>& v);

/// Columns of a matrix built from the given vectors.
template <class S>
Matrix<S> from_columns(const std::vector<Vector<S>>& cols) {
    const std::size_t n = cols.size();
    Matrix<S> m(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (cols[j].size() != n) throw DimensionError("column count must equal vector length");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

}  // namespace epscan::linalg
