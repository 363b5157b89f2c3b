#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epscan/errors.hpp"
#include "epscan/scalar.hpp"

namespace epscan {

/**
 * Univariate polynomial with coefficients in ascending degree order.
 *
 * The coefficient list is always trimmed, so the zero polynomial is the empty
 * list and degree() is -1 for it.
 */
template <class S>
class UniPoly {
public:
    using Traits = ScalarTraits<S>;

    UniPoly() = default;

    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const S& c) { return UniPoly(std::vector<S>{c}); }

    /// c * x^degree
    static UniPoly monomial(const S& c, std::size_t degree) {
        std::vector<S> v(degree + 1, Traits::zero());
        v[degree] = c;
        return UniPoly(std::move(v));
    }

    /// x - root
    static UniPoly linear_factor(const S& root) {
        return UniPoly(std::vector<S>{S(Traits::zero() - root), Traits::one()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero beyond the degree.
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }

    const S& leading() const {
        if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    /// Horner evaluation. T may be a wider ring than S (e.g. evaluate a
    /// polynomial with polynomial coefficients at a scalar).
    template <class T>
    T eval(const T& x) const {
        T acc = ScalarTraits<T>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + lift<T>(*it);
        return acc;
    }

    S operator()(const S& x) const { return eval<S>(x); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * S(Traits::from_rational(Rational(k))));
        return UniPoly(std::move(d));
    }

    UniPoly scaled(const S& s) const {
        std::vector<S> v(c_);
        for (auto& x : v) x = s * x;
        return UniPoly(std::move(v));
    }

    /// Divides by the leading coefficient (requires a field).
    UniPoly monic() const {
        if (c_.empty()) return {};
        const S inv = Traits::exact_div(Traits::one(), c_.back());
        return scaled(inv);
    }

    UniPoly operator-() const { return scaled(S(Traits::zero() - Traits::one())); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<S> v(std::max(a.c_.size(), b.c_.size()), Traits::zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<S> v(std::max(a.c_.size(), b.c_.size()), Traits::zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] - b.c_[k];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> v(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Human-readable form, highest degree first, e.g. "x^3 - 2*x - 1".
    std::string str(std::string_view var = "x") const;

private:
    template <class T>
    static T lift(const S& s) {
        if constexpr (std::is_same_v<T, S>) {
            return s;
        } else if constexpr (std::is_same_v<S, Rational>) {
            return ScalarTraits<T>::from_rational(s);
        } else {
            return T(s);
        }
    }

    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

template <class S>
struct DivMod {
    UniPoly<S> quotient;
    UniPoly<S> remainder;
};

/// Euclidean division over a field. Throws on a zero divisor.
template <class S>
DivMod<S> divmod(const UniPoly<S>& p, const UniPoly<S>& d) {
    using Traits = ScalarTraits<S>;
    if (d.is_zero()) throw std::domain_error("polynomial division by zero polynomial");
    if (p.degree() < d.degree()) return {UniPoly<S>(), p};
    std::vector<S> rem = p.coeffs();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<S> quot(rem.size() - dd, Traits::zero());
    const S& lead = d.leading();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (Traits::is_zero(rem[k])) continue;
        const S q = Traits::exact_div(rem[k], lead);
        quot[k - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - q * d.coeffs()[j];
        rem[k] = Traits::zero();
    }
    return {UniPoly<S>(std::move(quot)), UniPoly<S>(std::move(rem))};
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <class S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
    while (!b.is_zero()) {
        UniPoly<S> r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact quotient; throws InternalError if the division leaves a remainder.
template <class S>
UniPoly<S> exact_quotient(const UniPoly<S>& p, const UniPoly<S>& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw InternalError("polynomial division is not exact");
    return q;
}

using RatPoly = UniPoly<Rational>;

/// Polynomials over Q form a ring usable as a matrix scalar (Bareiss and
/// Faddeev-LeVerrier over Q[beta]).
template <>
struct ScalarTraits<RatPoly> {
    static RatPoly zero() { return {}; }
    static RatPoly one() { return RatPoly::constant(Rational(1)); }
    static bool is_zero(const RatPoly& x) { return x.is_zero(); }
    static RatPoly from_rational(const Rational& x) { return RatPoly::constant(x); }
    static RatPoly exact_div(const RatPoly& a, const RatPoly& b) { return exact_quotient(a, b); }
    static double magnitude(const RatPoly& x) {
        double s = 0.0;
        for (const auto& c : x.coeffs()) s += std::abs(c.to_double());
        return s;
    }
};

/// Scale a rational polynomial to integer coefficients with content 1 and a
/// positive leading coefficient. Roots are unchanged.
RatPoly primitive_part(const RatPoly& p);

/// Sum-of-terms evaluation, kept for cross-checking Horner.
Rational eval_termwise(const RatPoly& p, const Rational& x);

template <class S>
std::string UniPoly<S>::str(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const S& c = c_[k];
        if (Traits::is_zero(c)) continue;
        std::string cs;
        if constexpr (std::is_same_v<S, Rational>) {
            cs = c.str();
        } else if constexpr (std::is_same_v<S, RatPoly>) {
            cs = "(" + c.str("b") + ")";
        } else {
            cs = "(" + std::to_string(c.re()) + "," + std::to_string(c.im()) + ")";
        }
        bool negative = !cs.empty() && cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = cs == "1";
        if (k == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += std::string(var);
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace epscan
