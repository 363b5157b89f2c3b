#pragma once

#include <string>
#include <vector>

#include "epscan/family.hpp"
#include "epscan/matrix.hpp"
#include "epscan/poly.hpp"

namespace epscan {

/**
 * Polynomial in lambda whose coefficients are polynomials in beta:
 * p(lambda; beta) = sum_k coeffs[k](beta) * lambda^k.
 *
 * Characteristic polynomials are monic in lambda; the constructor does not
 * enforce it but discriminant_in_beta() does.
 */
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<RatPoly> coeffs_in_beta);

    int degree_lambda() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RatPoly>& coeffs() const { return c_; }
    const RatPoly& coeff(std::size_t k) const { return c_.at(k); }

    bool is_monic() const;
    /// Highest beta-degree among the coefficients (-1 for the zero polynomial).
    int degree_beta() const;

    /// p(lambda; beta) at a fixed beta.
    RatPoly specialize(const Rational& beta) const;

    /// d/d lambda.
    BiPoly derivative_lambda() const;

    /// As a polynomial in lambda over Q[beta].
    UniPoly<RatPoly> as_lambda_poly() const { return UniPoly<RatPoly>(c_); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    /// e.g. "l^3 + (-b - 2)*l + (-b - 1)"
    std::string str() const;

private:
    std::vector<RatPoly> c_;
};

/// Faddeev-LeVerrier coefficients of det(lambda*I - m), ascending, monic.
/// Works over any ring containing Q (Rational, RatPoly).
template <class S>
std::vector<S> faddeev_leverrier(const Matrix<S>& m) {
    using Traits = ScalarTraits<S>;
    const std::size_t n = m.dim();
    std::vector<S> c(n + 1, Traits::zero());
    c[n] = Traits::one();
    // M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
    Matrix<S> mk = Matrix<S>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Matrix<S> amk = m * mk;
        const S ck = Traits::zero() - Traits::exact_div(amk.trace(), Traits::from_rational(Rational(k)));
        c[n - k] = ck;
        if (k < n) mk = amk.shifted(Traits::zero() - ck);
    }
    return c;
}

/// det(lambda*I - m), exact.
RatPoly char_poly(const Matrix<Rational>& m);

/// det(lambda*I - H(beta)) as a polynomial in (lambda, beta).
BiPoly char_poly_family(const AffineFamily& fam);

/// Resultant of two polynomials in lambda over Q[beta], via the Sylvester
/// determinant (fraction-free elimination).
RatPoly resultant_lambda(const UniPoly<RatPoly>& p, const UniPoly<RatPoly>& q);

/// Disc_lambda(p) = (-1)^{n(n-1)/2} Res_lambda(p, dp/dlambda) for monic p.
RatPoly discriminant_in_beta(const BiPoly& p);

}  // namespace epscan
