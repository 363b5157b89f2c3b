#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace epscan {

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * Always kept in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
 */
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : q_(to_mpz(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& num, const mpz_class& den);

    template <std::integral I, std::integral J>
    Rational(I num, J den) : Rational(to_mpz(num), to_mpz(den)) {}

    explicit Rational(mpq_class q);

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    /// Parses "p/q", an integer, or a decimal such as "-1.25" or "2.5e-3".
    /// Decimals are converted digit by digit, never through a float.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    template <std::integral I>
    static mpz_class to_mpz(I v) {
        if constexpr (std::is_signed_v<I>) {
            return mpz_class(static_cast<long>(v));
        } else {
            return mpz_class(static_cast<unsigned long>(v));
        }
    }

    mpq_class q_{0};
};

/// Floor of a rational as an integer.
mpz_class floor(const Rational& r);
/// Ceiling of a rational as an integer.
mpz_class ceil(const Rational& r);

}  // namespace epscan
