#include <gtest/gtest.h>

#include "epscan/charpoly.hpp"
#include "epscan/linalg.hpp"
#include "epscan/roots.hpp"
#include "support/oracles.hpp"

using namespace epscan;

namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

// p(lambda; beta) = lambda^3 - (beta + 2) lambda - (beta + 1)
BiPoly expected_family_poly() {
    return BiPoly({poly({-1, -1}), poly({-2, -1}), RatPoly{}, poly({1})});
}

}  // namespace

TEST(CharPoly, Examples) {
    const auto fam = AffineFamily::paper();
    EXPECT_EQ(char_poly(fam.at(1)), poly({-2, -3, 0, 1}));
    EXPECT_EQ(char_poly(fam.at(1)), oracle::char_poly(fam.at(1)));
    EXPECT_EQ(char_poly(Matrix<Rational>::identity(3)), poly({-1, 3, -3, 1}));
    EXPECT_EQ(char_poly(fam.at(0)), poly({-1, -2, 0, 1}));
    EXPECT_EQ(char_poly(fam.at(0)), oracle::char_poly(fam.at(0)));
}

TEST(CharPoly, MatchesCofactorOracleOnRandomMatrices) {
    oracle::Gen gen(21);
    for (int k = 0; k < 120; ++k) {
        const auto m = gen.matrix(1 + k % 5);
        EXPECT_EQ(char_poly(m), oracle::char_poly(m));
    }
}

TEST(CharPoly, TraceAndDeterminantIdentities) {
    oracle::Gen gen(22);
    for (int k = 0; k < 150; ++k) {
        const std::size_t n = 1 + k % 6;
        const auto m = gen.matrix(n);
        const RatPoly p = char_poly(m);
        ASSERT_EQ(p.degree(), static_cast<int>(n));
        EXPECT_EQ(p.leading(), Rational(1));
        EXPECT_EQ(p.coeff(n - 1), -m.trace());
        const Rational det = linalg::determinant(m);
        EXPECT_EQ(p.coeff(0), n % 2 == 0 ? det : -det);
        if (n <= 5) EXPECT_EQ(det, oracle::det(m));
    }
}

TEST(CharPolyFamily, Examples) {
    EXPECT_EQ(char_poly_family(AffineFamily::paper()).coeffs(), expected_family_poly().coeffs());

    // beta I, n = 2: (lambda - beta)^2 = lambda^2 - 2 beta lambda + beta^2
    const AffineFamily scalar(Matrix<Rational>(2), Matrix<Rational>::identity(2));
    const BiPoly p = char_poly_family(scalar);
    EXPECT_EQ(p.coeff(0), poly({0, 0, 1}));
    EXPECT_EQ(p.coeff(1), poly({0, -2}));
    EXPECT_EQ(p.coeff(2), poly({1}));

    oracle::Gen gen(23);
    const AffineFamily constant(gen.matrix(4), Matrix<Rational>(4));
    const BiPoly c = char_poly_family(constant);
    EXPECT_LE(c.degree_beta(), 0);
    EXPECT_TRUE(c.is_monic());
}

TEST(CharPolyFamily, SpecializationCommutes) {
    oracle::Gen gen(24);
    std::vector<AffineFamily> families{AffineFamily::paper()};
    for (int k = 0; k < 20; ++k) families.push_back(gen.family(2 + k % 4));
    for (const auto& fam : families) {
        const BiPoly p = char_poly_family(fam);
        for (int k = 0; k < 50; ++k) {
            const Rational beta = gen.beta();
            EXPECT_EQ(p.specialize(beta), char_poly(fam.at(beta)));
        }
    }
}

TEST(Discriminant, FamilyExample) {
    // 4b^3 - 3b^2 - 6b + 5 = (b - 1)^2 (4b + 5)
    const RatPoly disc = discriminant_in_beta(char_poly_family(AffineFamily::paper()));
    EXPECT_EQ(disc, poly({5, -6, -3, 4}));
    EXPECT_EQ(disc, poly({-1, 1}) * poly({-1, 1}) * poly({5, 4}));
    // -4p^3 - 27q^2 with p = -(b+2), q = -(b+1)
    const RatPoly pp = poly({-2, -1}), qq = poly({-1, -1});
    EXPECT_EQ(disc, RatPoly::constant(-4) * pp * pp * pp - RatPoly::constant(27) * qq * qq);
}

TEST(Discriminant, PerfectSquareVanishes) {
    const AffineFamily scalar(Matrix<Rational>(2), Matrix<Rational>::identity(2));
    EXPECT_TRUE(discriminant_in_beta(char_poly_family(scalar)).is_zero());
}

TEST(Discriminant, BetaFreeDistinctRoots) {
    const AffineFamily constant(Matrix<Rational>{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, Matrix<Rational>(3));
    const RatPoly disc = discriminant_in_beta(char_poly_family(constant));
    EXPECT_EQ(disc.degree(), 0);
    EXPECT_EQ(disc.coeff(0), Rational(4));  // prod (li - lj)^2 = 1 * 4 * 1
}

TEST(Discriminant, RequiresMonic) {
    EXPECT_THROW(discriminant_in_beta(BiPoly({poly({1}), poly({2})})), PreconditionError);
}

TEST(Discriminant, CubicFormulaOnRandomFamilies) {
    oracle::Gen gen(25);
    for (int k = 0; k < 60; ++k) {
        const BiPoly p = char_poly_family(gen.family(3));
        const RatPoly expected = oracle::cubic_discriminant(p.coeff(2), p.coeff(1), p.coeff(0));
        EXPECT_EQ(discriminant_in_beta(p), expected);
    }
}

TEST(Discriminant, EuclidResultantOracleAtRandomBeta) {
    oracle::Gen gen(26);
    for (int k = 0; k < 40; ++k) {
        const auto fam = gen.family(2 + k % 4);
        const BiPoly p = char_poly_family(fam);
        const RatPoly disc = discriminant_in_beta(p);
        for (int j = 0; j < 5; ++j) {
            const Rational beta = gen.beta();
            EXPECT_EQ(disc(beta), oracle::discriminant(p.specialize(beta)));
        }
    }
}

TEST(Isolation, RationalRoots) {
    const auto roots = isolate_real_roots(poly({5, -6, -3, 4}));
    ASSERT_EQ(roots.size(), 2u);
    ASSERT_TRUE(roots[0].is_exact());
    EXPECT_EQ(*roots[0].exact, Rational(-5, 4));
    EXPECT_EQ(roots[0].multiplicity, 1);
    ASSERT_TRUE(roots[1].is_exact());
    EXPECT_EQ(*roots[1].exact, Rational(1));
    EXPECT_EQ(roots[1].multiplicity, 2);
}

TEST(Isolation, NoRealRoots) {
    EXPECT_TRUE(isolate_real_roots(poly({1, 0, 1})).empty());
}

TEST(Isolation, IrrationalRoots) {
    const RatPoly q = poly({-2, 0, 1});
    const auto roots = isolate_real_roots(q);
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots) {
        EXPECT_FALSE(r.is_exact());
        EXPECT_EQ(r.multiplicity, 1);
        EXPECT_LT(r.lo, r.hi);
        EXPECT_LT(r.width(), default_isolation_width());
        EXPECT_LT(q(r.lo).sign() * q(r.hi).sign(), 0);
        EXPECT_NEAR(std::abs(r.approx()), std::sqrt(2.0), 1e-11);
    }
    EXPECT_LT(roots[0].approx(), 0.0);
}

TEST(Isolation, ZeroPolynomialThrows) {
    EXPECT_THROW(isolate_real_roots(RatPoly{}), DegenerateFamilyError);
}

TEST(Isolation, RandomProductsOfKnownRoots) {
    oracle::Gen gen(27);
    for (int k = 0; k < 60; ++k) {
        // rational roots with multiplicities, times an irrational quadratic and a positive one
        RatPoly p = RatPoly::constant(gen.integer(1, 5));
        std::vector<std::pair<Rational, int>> expected;
        for (int j = 0; j < gen.integer(0, 3); ++j) {
            const Rational r(gen.integer(-9, 9), gen.integer(1, 4));
            if (std::any_of(expected.begin(), expected.end(), [&](auto& e) { return e.first == r; })) continue;
            const int mult = gen.integer(1, 3);
            for (int m = 0; m < mult; ++m) p = p * RatPoly::linear_factor(r);
            expected.emplace_back(r, mult);
        }
        const int c = gen.integer(2, 7);
        if (c != 4) p = p * poly({-c, 0, 1});  // roots +-sqrt(c)
        p = p * poly({1, 0, 1});
        const auto roots = isolate_real_roots(p);

        std::size_t exact = 0, intervals = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            if (i > 0) EXPECT_LT(roots[i - 1].approx(), r.approx());
            if (r.is_exact()) {
                ++exact;
                EXPECT_TRUE(p(*r.exact).is_zero());
                auto it = std::find_if(expected.begin(), expected.end(), [&](auto& e) { return e.first == *r.exact; });
                ASSERT_NE(it, expected.end());
                EXPECT_EQ(r.multiplicity, it->second);
            } else {
                ++intervals;
                const auto chain = sturm_sequence(r.factor);
                EXPECT_EQ(sturm_count(chain, r.lo, r.hi), 1);
                EXPECT_NEAR(std::abs(r.approx()), std::sqrt(static_cast<double>(c)), 1e-10);
            }
        }
        EXPECT_EQ(exact, expected.size());
        EXPECT_EQ(intervals, c == 4 ? 0u : 2u);
    }
}

TEST(Isolation, DiscriminantVanishesAtRoots) {
    oracle::Gen gen(28);
    for (int k = 0; k < 40; ++k) {
        const RatPoly disc = discriminant_in_beta(char_poly_family(gen.family(3)));
        if (disc.is_zero()) continue;
        for (const auto& r : isolate_real_roots(disc)) {
            if (r.is_exact()) {
                EXPECT_TRUE(disc(*r.exact).is_zero());
            } else {
                EXPECT_EQ(sturm_count(sturm_sequence(r.factor), r.lo, r.hi), 1);
                EXPECT_TRUE(divmod(disc, r.factor).remainder.is_zero());
            }
        }
    }
}
