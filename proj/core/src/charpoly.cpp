#include "epscan/charpoly.hpp"

#include <algorithm>
#include <utility>

#include "epscan/linalg.hpp"

namespace epscan {

BiPoly::BiPoly(std::vector<RatPoly> coeffs_in_beta) : c_(std::move(coeffs_in_beta)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool BiPoly::is_monic() const {
    return !c_.empty() && c_.back() == RatPoly::constant(Rational(1));
}

int BiPoly::degree_beta() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

RatPoly BiPoly::specialize(const Rational& beta) const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c(beta));
    return RatPoly(std::move(out));
}

BiPoly BiPoly::derivative_lambda() const { return BiPoly(as_lambda_poly().derivative().coeffs()); }

std::string BiPoly::str() const { return as_lambda_poly().str("l"); }

RatPoly char_poly(const Matrix<Rational>& m) { return RatPoly(faddeev_leverrier(m)); }

BiPoly char_poly_family(const AffineFamily& fam) {
    const std::size_t n = fam.dim();
    std::vector<RatPoly> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries.emplace_back(
                std::vector<Rational>{fam.constant_part()(i, j), fam.linear_part()(i, j)});
        }
    }
    return BiPoly(faddeev_leverrier(Matrix<RatPoly>(n, std::move(entries))));
}

RatPoly resultant_lambda(const UniPoly<RatPoly>& p, const UniPoly<RatPoly>& q) {
    const int dp = p.degree();
    const int dq = q.degree();
    if (dp < 0 || dq < 0) return {};
    if (dp == 0 && dq == 0) return RatPoly::constant(Rational(1));
    if (dp == 0) {
        // Res(c, q) = c^deg q
        RatPoly r = RatPoly::constant(Rational(1));
        for (int k = 0; k < dq; ++k) r = r * p.leading();
        return r;
    }
    if (dq == 0) {
        RatPoly r = RatPoly::constant(Rational(1));
        for (int k = 0; k < dp; ++k) r = r * q.leading();
        return r;
    }
    // Sylvester matrix: dq rows of p's coefficients, dp rows of q's, highest degree first.
    const std::size_t size = static_cast<std::size_t>(dp + dq);
    Matrix<RatPoly> syl(size);
    for (int r = 0; r < dq; ++r) {
        for (int k = 0; k <= dp; ++k) {
            syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + dp - k)) =
                p.coeff(static_cast<std::size_t>(k));
        }
    }
    for (int r = 0; r < dp; ++r) {
        for (int k = 0; k <= dq; ++k) {
            syl(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + dq - k)) =
                q.coeff(static_cast<std::size_t>(k));
        }
    }
    return linalg::determinant(std::move(syl));
}

RatPoly discriminant_in_beta(const BiPoly& p) {
    if (!p.is_monic()) throw PreconditionError("discriminant requires a polynomial monic in lambda");
    const int n = p.degree_lambda();
    if (n <= 1) return RatPoly::constant(Rational(1));
    const auto lam = p.as_lambda_poly();
    RatPoly res = resultant_lambda(lam, lam.derivative());
    const int swaps = n * (n - 1) / 2;
    return swaps % 2 == 0 ? res : -res;
}

}  // namespace epscan
