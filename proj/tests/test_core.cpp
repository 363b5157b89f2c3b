#include <gtest/gtest.h>

#include <cmath>

#include "epscan/family.hpp"
#include "epscan/matrix.hpp"
#include "epscan/poly.hpp"
#include "support/oracles.hpp"

using namespace epscan;

namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

}  // namespace

TEST(Rational, CanonicalForm) {
    const Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-5/4"), Rational(-5, 4));
    EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
    EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
    EXPECT_EQ(Rational::parse("2.5e-3"), Rational(1, 400));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational::parse(" 3/6 "), Rational(1, 2));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1.2.3"), ParseError);
}

TEST(Rational, FromDoubleIsExact) {
    EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
    EXPECT_EQ(Rational::from_double(-1.25), Rational(-5, 4));
    EXPECT_NE(Rational::from_double(0.1), Rational(1, 10));
}

TEST(Rational, ArithmeticIsExact) {
    oracle::Gen gen(11);
    for (int k = 0; k < 500; ++k) {
        const Rational a = gen.beta(), b = gen.beta();
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) - (b * a), Rational(0));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(CplxF, RejectsNonFinite) {
    EXPECT_THROW(CplxF(NAN, 0.0), std::domain_error);
    EXPECT_THROW(CplxF(0.0, INFINITY), std::domain_error);
    EXPECT_NO_THROW(CplxF(1.0, -2.0));
}

TEST(Matrix, IdentityTimesIdentity) {
    const auto i3 = Matrix<Rational>::identity(3);
    EXPECT_EQ(i3 * i3, i3);
}

TEST(Matrix, TransposeOfFamily) {
    const auto fam = AffineFamily::paper();
    const auto h1 = fam.at(1);
    EXPECT_EQ(h1.transpose(), h1);
    const auto h0 = fam.at(0);
    EXPECT_NE(h0.transpose(), h0);
    EXPECT_EQ(h0(0, 2), Rational(1));
    EXPECT_EQ(h0(2, 0), Rational(0));
}

TEST(Matrix, DimensionMismatchThrows) {
    EXPECT_THROW(Matrix<Rational>(2) + Matrix<Rational>(3), DimensionError);
    EXPECT_THROW(Matrix<Rational>(2) * Matrix<Rational>(3), DimensionError);
    EXPECT_THROW(Matrix<Rational>(2, std::vector<Rational>(3)), DimensionError);
}

TEST(Matrix, AssociativityAndInvolution) {
    oracle::Gen gen(12);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + k % 4;
        const auto a = gen.matrix(n), b = gen.matrix(n), c = gen.matrix(n);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a.transpose().transpose(), a);
        EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
        EXPECT_EQ(a.scaled(Rational(2)) - a, a);
    }
}

TEST(Poly, Derivative) {
    const RatPoly p = poly({-1, -2, 0, 1});  // l^3 - 2l - 1
    EXPECT_EQ(p.derivative(), poly({-2, 0, 3}));
    EXPECT_EQ(p.derivative().degree(), p.degree() - 1);
}

TEST(Poly, EvalAtRoot) {
    EXPECT_EQ(poly({-2, -1, 1})(Rational(-1)), Rational(0));
}

TEST(Poly, DivisionByLinearFactor) {
    // (l^3 - (b+2) l - (b+1)) / (l + 1) = l^2 - l - (b+1) at several fixed b
    for (int b = -3; b <= 3; ++b) {
        const RatPoly p = poly({-(Rational(b) + 1), -(Rational(b) + 2), 0, 1});
        const auto [q, r] = divmod(p, poly({1, 1}));
        EXPECT_EQ(q, poly({-(Rational(b) + 1), -1, 1}));
        EXPECT_TRUE(r.is_zero());
    }
}

TEST(Poly, DivisionByZeroThrows) {
    EXPECT_THROW(divmod(poly({1, 1}), RatPoly{}), std::domain_error);
}

TEST(Poly, HornerMatchesTermwise) {
    oracle::Gen gen(13);
    for (int k = 0; k < 200; ++k) {
        std::vector<Rational> c;
        for (int d = 0; d <= gen.integer(0, 8); ++d) c.push_back(gen.entry());
        const RatPoly p(c);
        const Rational x = gen.beta();
        EXPECT_EQ(p(x), eval_termwise(p, x));
    }
}

TEST(Poly, GcdAndProducts) {
    const RatPoly a = poly({-1, 1}), b = poly({2, 1}), c = poly({1, 0, 1});
    EXPECT_EQ(gcd(a * b, a * c), a);
    EXPECT_EQ(exact_quotient(a * b * c, b), a * c);
}

TEST(Family, At) {
    const auto fam = AffineFamily::paper();
    EXPECT_EQ(fam.at(1), (Matrix<Rational>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    EXPECT_EQ(fam.at(Rational(-5, 4)), (Matrix<Rational>{{0, 1, 1}, {1, 0, 1}, {Rational(-5, 4), 1, 0}}));
    EXPECT_EQ(family_at(fam, 0), fam.constant_part());
    oracle::Gen gen(14);
    const auto other = gen.family(4);
    EXPECT_EQ(other.at(0), other.constant_part());
}

TEST(Family, DimensionsMustAgree) {
    EXPECT_THROW(AffineFamily(Matrix<Rational>(2), Matrix<Rational>(3)), DimensionError);
}
