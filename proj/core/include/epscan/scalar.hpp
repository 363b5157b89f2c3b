#pragma once

#include "epscan/complex.hpp"
#include "epscan/rational.hpp"

namespace epscan {

// Ring operations the generic matrix and polynomial code needs beyond + - *.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational from_rational(const Rational& x) { return x; }
    /// Exact division; the divisor must divide (always true in a field).
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
    static double magnitude(const Rational& x) { return std::abs(x.to_double()); }
};

template <>
struct ScalarTraits<CplxF> {
    static CplxF zero() { return CplxF(); }
    static CplxF one() { return CplxF(1.0); }
    static bool is_zero(const CplxF& x) { return x.is_zero(); }
    static CplxF from_rational(const Rational& x) { return CplxF(x.to_double()); }
    static CplxF exact_div(const CplxF& a, const CplxF& b) { return a / b; }
    static double magnitude(const CplxF& x) { return x.abs(); }
};

}  // namespace epscan
