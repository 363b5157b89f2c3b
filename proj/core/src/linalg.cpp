#include "epscan/linalg.hpp"

#include <cmath>
#include <complex>

namespace epscan::linalg {

Vector<Rational> primitive_integer(const Vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) {
        const mpz_class d = x.den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    int lead_sign = 0;
    for (const auto& x : v) {
        mpz_class k = x.num() * (lcm_den / x.den());
        if (lead_sign == 0) lead_sign = sgn(k);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        ints.push_back(std::move(k));
    }
    if (g == 0) throw PreconditionError("cannot normalize the zero vector");
    if (lead_sign < 0) g = -g;
    Vector<Rational> out;
    out.reserve(v.size());
    for (const auto& k : ints) out.emplace_back(mpz_class(k / g), mpz_class(1));
    return out;
}

Vector<CplxF> normalize_unit(const Vector<CplxF>& v) {
    double norm2 = 0.0;
    double largest = 0.0;
    for (const auto& x : v) {
        norm2 += std::norm(x.value());
        largest = std::max(largest, x.abs());
    }
    if (largest == 0.0) throw PreconditionError("cannot normalize the zero vector");
    // First entry that is not round-off relative to the largest one fixes the phase.
    std::size_t lead = 0;
    while (v[lead].abs() <= 1e-12 * largest) ++lead;
    const std::complex<double> phase = std::conj(v[lead].value()) / v[lead].abs();
    const double inv_norm = 1.0 / std::sqrt(norm2);
    Vector<CplxF> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x.value() * phase * inv_norm);
    out[lead] = CplxF(v[lead].abs() * inv_norm, 0.0);
    return out;
}

Vector<CplxF> to_numeric(const Vector<Rational>& v) {
    Vector<CplxF> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x.to_double());
    return out;
}

}  // namespace epscan::linalg
