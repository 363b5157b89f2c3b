#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epscan/errors.hpp"
#include "epscan/scalar.hpp"

namespace epscan {

template <class S>
using Vector = std::vector<S>;

/**
 * Dense square matrix, row-major. The dimension is fixed at construction.
 *
 * S must provide + - * and a ScalarTraits specialization.
 */
template <class S>
class Matrix {
public:
    using Traits = ScalarTraits<S>;

    explicit Matrix(std::size_t n) : n_(n), data_(n * n, Traits::zero()) {
        if (n == 0) throw DimensionError("matrix dimension must be at least 1");
    }

    Matrix(std::size_t n, std::vector<S> row_major) : n_(n), data_(std::move(row_major)) {
        if (n == 0) throw DimensionError("matrix dimension must be at least 1");
        if (data_.size() != n * n) {
            throw DimensionError("expected " + std::to_string(n * n) + " entries, got " +
                                 std::to_string(data_.size()));
        }
    }

    Matrix(std::initializer_list<std::initializer_list<S>> rows) : n_(rows.size()) {
        if (n_ == 0) throw DimensionError("matrix dimension must be at least 1");
        data_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw DimensionError("matrix rows must all have length n");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
        return m;
    }

    std::size_t dim() const { return n_; }

    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    std::span<const S> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    Vector<S> column(std::size_t j) const {
        Vector<S> c;
        c.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
        return c;
    }
    const std::vector<S>& entries() const { return data_; }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    S trace() const {
        S t = Traits::zero();
        for (std::size_t i = 0; i < n_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_symmetric() const { return *this == transpose(); }

    Matrix scaled(const S& c) const {
        Matrix out(*this);
        for (auto& x : out.data_) x = c * x;
        return out;
    }

    /// this - c*I
    Matrix shifted(const S& c) const {
        Matrix out(*this);
        for (std::size_t i = 0; i < n_; ++i) out(i, i) = out(i, i) - c;
        return out;
    }

    Vector<S> apply(std::span<const S> v) const {
        if (v.size() != n_) throw DimensionError("vector length does not match matrix dimension");
        Vector<S> out(n_, Traits::zero());
        for (std::size_t i = 0; i < n_; ++i) {
            S acc = Traits::zero();
            for (std::size_t j = 0; j < n_; ++j) acc = acc + (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const S&>()))>> {
        using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
        std::vector<T> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<T>(n_, std::move(out));
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a);
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] + b.data_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a);
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] - b.data_[k];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        const std::size_t n = a.n_;
        Matrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const S& aik = a(i, k);
                if (Traits::is_zero(aik)) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) = out(i, j) + aik * b(k, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) {
            throw DimensionError("dimension mismatch: " + std::to_string(a.n_) + " vs " +
                                 std::to_string(b.n_));
        }
    }

    std::size_t n_;
    std::vector<S> data_;
};

/// Entrywise conversion of an exact matrix into the floating backend.
inline Matrix<CplxF> to_numeric(const Matrix<Rational>& m) {
    return m.map([](const Rational& x) { return CplxF(x.to_double()); });
}

/// Infinity norm (max absolute row sum).
template <class S>
double norm_inf(const Matrix<S>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double s = 0.0;
        for (const auto& x : m.row(i)) s += ScalarTraits<S>::magnitude(x);
        best = std::max(best, s);
    }
    return best;
}

template <class S>
double norm_inf(std::span<const S> v) {
    double best = 0.0;
    for (const auto& x : v) best = std::max(best, ScalarTraits<S>::magnitude(x));
    return best;
}

}  // namespace epscan
