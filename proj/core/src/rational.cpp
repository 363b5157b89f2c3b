#include "epscan/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "epscan/errors.hpp"

namespace epscan {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Signed integer literal: [+-]digits
mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("invalid rational literal '" + std::string(whole) + "'");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("non-finite double has no rational value");
    return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational literal");

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
        const mpz_class den = parse_integer(trim(s.substr(slash + 1)), s);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }

    // Decimal: [+-]int[.frac][(e|E)[+-]exp]
    std::string_view mant = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        const mpz_class ez = parse_integer(s.substr(e + 1), s);
        if (!ez.fits_slong_p() || ::abs(ez) > 100000) {
            throw ParseError("exponent out of range in '" + std::string(s) + "'");
        }
        exponent = ez.get_si();
    }
    bool negative = false;
    if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
        negative = mant.front() == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = mant.find('.'); dot != std::string_view::npos) {
        const auto ip = mant.substr(0, dot);
        const auto fp = mant.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            throw ParseError("invalid rational literal '" + std::string(s) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) throw ParseError("invalid rational literal '" + std::string(s) + "'");
        digits = std::string(mant);
    }
    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long shift = exponent - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? Rational(mpz_class(num * scale), mpz_class(1)) : Rational(num, scale);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

mpz_class floor(const Rational& r) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

mpz_class ceil(const Rational& r) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return out;
}

}  // namespace epscan
