#include "epscan/poly.hpp"

#include <vector>

namespace epscan {

RatPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (p.leading().sign() < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(mpz_class(v / content), mpz_class(1));
    return RatPoly(std::move(out));
}

Rational eval_termwise(const RatPoly& p, const Rational& x) {
    Rational sum = 0;
    Rational power = 1;
    for (const auto& c : p.coeffs()) {
        sum += c * power;
        power *= x;
    }
    return sum;
}

}  // namespace epscan
