#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "epscan/poly.hpp"

namespace epscan {

/// Default isolating-interval width handed to downstream consumers: 2^-40.
Rational default_isolation_width();

/**
 * A real root of a rational polynomial: either an exact rational value or an
 * open interval (lo, hi) holding exactly one root of `factor`.
 *
 * `factor` is the square-free integer polynomial the root belongs to; it lets
 * callers refine the interval further.
 */
struct IsolatedRoot {
    std::optional<Rational> exact;
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    RatPoly factor;

    bool is_exact() const { return exact.has_value(); }
    Rational midpoint() const;
    double approx() const { return midpoint().to_double(); }
    Rational width() const { return is_exact() ? Rational(0) : hi - lo; }
};

/// Square-free factors f_i with p = c * prod f_i^i (Yun). Each factor is a
/// primitive integer polynomial of positive degree.
std::vector<std::pair<RatPoly, int>> square_free_decomposition(const RatPoly& p);

/// Sturm chain of a square-free polynomial.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);

/// Number of sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b);

/// Number of distinct real roots of p.
int count_real_roots(const RatPoly& p);

/// Strict bound: every root of p has |root| < bound.
Rational cauchy_bound(const RatPoly& p);

/**
 * All real roots of q, sorted ascending, with multiplicities.
 *
 * Rational roots are reported exactly; irrational ones as pairwise disjoint
 * isolating intervals narrower than max_width. Throws DegenerateFamilyError
 * for the zero polynomial.
 */
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& q,
                                             const Rational& max_width = default_isolation_width());

/// Shrinks an interval root by bisection until its width is below max_width.
/// Exact roots are returned unchanged.
IsolatedRoot refine(IsolatedRoot root, const Rational& max_width);

}  // namespace epscan
