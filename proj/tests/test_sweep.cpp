#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "epscan/sweep.hpp"
#include "support/oracles.hpp"

using namespace epscan;

namespace {

using cd = std::complex<double>;

std::vector<cd> values_at(const std::vector<Branch>& branches, std::size_t k) {
    std::vector<cd> out;
    for (const auto& b : branches) out.push_back(b.samples[k].value.value());
    return out;
}

std::vector<std::vector<std::pair<double, double>>> polylines(const std::string& svg) {
    std::vector<std::vector<std::pair<double, double>>> out;
    const std::regex line("<polyline[^>]*points=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
        std::vector<std::pair<double, double>> pts;
        std::istringstream in((*it)[1].str());
        std::string tok;
        while (in >> tok) {
            const auto comma = tok.find(',');
            pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
        }
        out.push_back(std::move(pts));
    }
    return out;
}

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

AffineFamily two_by_two(Matrix<Rational> a, Matrix<Rational> b) { return AffineFamily(std::move(a), std::move(b)); }

}  // namespace

TEST(Grid, EndpointsAndInteriorPoints) {
    EXPECT_EQ(grid_point(-2, 2, 401, 0), -2.0);
    EXPECT_EQ(grid_point(-2, 2, 401, 400), 2.0);
    EXPECT_EQ(grid_point(-2, 2, 401, 75), -1.25);
    EXPECT_EQ(grid_point(-2, 2, 401, 200), 0.0);
    EXPECT_EQ(grid_point(-2, 2, 401, 300), 1.0);
}

TEST(MatchBranches, TiesKeepBranchOrder) {
    const std::vector<CplxF> prev{CplxF(-1.0), CplxF(-1.0), CplxF(2.0)};
    EXPECT_EQ(match_branches(prev, prev), (std::vector<std::size_t>{0, 1, 2}));
    const std::vector<CplxF> next{CplxF(2.0), CplxF(-1.0), CplxF(-1.0)};
    EXPECT_EQ(match_branches(prev, next), (std::vector<std::size_t>{1, 2, 0}));
    EXPECT_THROW(match_branches(prev, {CplxF(1.0)}), DimensionError);
}

TEST(Sweep, PaperBranches) {
    const auto fam = AffineFamily::paper();
    const auto branches = sweep(fam, -2, 2, 401);
    ASSERT_EQ(branches.size(), 3u);
    for (const auto& b : branches) {
        ASSERT_EQ(b.samples.size(), 401u);
        for (std::size_t k = 1; k < b.samples.size(); ++k) EXPECT_LT(b.samples[k - 1].beta, b.samples[k].beta);
    }
    EXPECT_LT(oracle::multiset_distance(values_at(branches, 200), {-1.0, (1 - std::sqrt(5.0)) / 2, (1 + std::sqrt(5.0)) / 2}),
              1e-14);
}

TEST(Sweep, ImaginaryPartsAndClosedForm) {
    const auto branches = sweep(AffineFamily::paper(), -2, 2, 401);
    for (std::size_t k = 0; k < 401; ++k) {
        const double beta = branches[0].samples[k].beta;
        const auto vals = values_at(branches, k);
        EXPECT_LT(oracle::multiset_distance(vals, oracle::closed_form(beta)), 1e-12) << beta;
        std::vector<double> ims;
        for (const auto& v : vals) ims.push_back(v.imag());
        std::sort(ims.begin(), ims.end());
        if (beta >= -1.25) {
            for (double im : ims) EXPECT_EQ(im, 0.0) << beta;
        } else {
            const double expected = std::sqrt(-4 * beta - 5) / 2;
            EXPECT_NEAR(ims[0], -expected, 1e-12);
            EXPECT_EQ(ims[1], 0.0);
            EXPECT_NEAR(ims[2], expected, 1e-12);
            EXPECT_EQ(ims[0], -ims[2]);
        }
    }
}

TEST(Sweep, ConstantFamilyIsFlat) {
    const AffineFamily fam(Matrix<Rational>{{1, 2}, {3, 4}}, Matrix<Rational>(2));
    for (const auto& b : sweep(fam, -1, 1, 50))
        for (const auto& s : b.samples) EXPECT_EQ(s.value, b.samples.front().value);
}

TEST(Sweep, Preconditions) {
    const auto fam = AffineFamily::paper();
    EXPECT_THROW(sweep(fam, 1, 1, 10), PreconditionError);
    EXPECT_THROW(sweep(fam, 1, 0, 10), PreconditionError);
    EXPECT_THROW(sweep(fam, 0, 1, 1), PreconditionError);
    EXPECT_THROW(sweep(fam, 0, 1, 1'000'001), PreconditionError);
    EXPECT_EQ(sweep(fam, 0, 1, 2).front().samples.size(), 2u);
}

TEST(Sweep, MatchingPermutesValuesAndIsOptimal) {
    oracle::Gen gen(61);
    std::vector<AffineFamily> families{AffineFamily::paper()};
    for (int k = 0; k < 10; ++k) families.push_back(gen.family(3 + k % 2));
    for (const auto& fam : families) {
        const auto branches = sweep(fam, -2, 2, 101);
        const std::size_t n = fam.dim();
        for (std::size_t k = 0; k < 101; ++k) {
            const double beta = branches[0].samples[k].beta;
            const auto vals = values_at(branches, k);
            std::vector<cd> expected;
            for (const auto& v : sample_spectrum(fam, beta)) expected.push_back(v.value());
            EXPECT_LT(oracle::multiset_distance(vals, expected), 1e-9);
            // conjugate closure
            std::vector<cd> conj;
            for (const auto& v : vals) conj.push_back(std::conj(v));
            EXPECT_LT(oracle::multiset_distance(vals, conj), 1e-12);
            if (k == 0) continue;
            // the chosen continuation is no worse than any other assignment
            const auto prev = values_at(branches, k - 1);
            double chosen = 0.0;
            for (std::size_t b = 0; b < n; ++b) chosen += std::abs(vals[b] - prev[b]);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            do {
                double cost = 0.0;
                for (std::size_t b = 0; b < n; ++b) cost += std::abs(vals[perm[b]] - prev[b]);
                EXPECT_LE(chosen, cost + 1e-15);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST(Sweep, ContinuityAcrossTheCrossing) {
    const auto branches = sweep(AffineFamily::paper(), -2, 2, 401);
    auto jump = [&](std::size_t b, std::size_t k) { return std::abs(branches[b].samples[k].value.value() - branches[b].samples[k - 1].value.value()); };
    for (std::size_t k = 2; k + 1 < 401; ++k) {
        double local = 0.0;
        for (std::size_t b = 0; b < 3; ++b) local = std::max({local, jump(b, k - 1), jump(b, k + 1)});
        for (std::size_t b = 0; b < 3; ++b) EXPECT_LE(jump(b, k), 10.0 * local + 1e-12) << k;
    }
    // the two branches meeting at beta = 1 pass straight through
    std::size_t at_minus_one = 0;
    for (const auto& b : branches) at_minus_one += b.samples[300].value == CplxF(-1.0);
    EXPECT_EQ(at_minus_one, 2u);
}

TEST(Sweep, SquareRootScalingNearCoalescence) {
    const auto fam = AffineFamily::paper();
    for (int k = 0; k <= 20; ++k) {
        // beta = -5/4 + d, d from 1e-6 to 1e-4 (log spaced)
        const double d = std::pow(10.0, -6.0 + 2.0 * k / 20.0);
        const double beta = -1.25 + d;
        const auto vals = sample_spectrum(fam, beta);
        ASSERT_EQ(vals.size(), 3u);
        // the two values near 1/2
        std::vector<cd> near;
        for (const auto& v : vals)
            if (std::abs(v.value() - 0.5) < 0.1) near.push_back(v.value());
        ASSERT_EQ(near.size(), 2u);
        const double ratio = std::abs(near[0] - near[1]) / std::sqrt(std::abs(beta + 1.25));
        EXPECT_NEAR(ratio, 2.0, 0.1);
    }
}

TEST(Critical, PaperFamily) {
    const auto cps = critical_points(AffineFamily::paper());
    ASSERT_EQ(cps.size(), 2u);
    EXPECT_EQ(*cps[0].beta.exact, Rational(-5, 4));
    EXPECT_EQ(cps[0].kind, CriticalKind::Exceptional);
    EXPECT_EQ(std::get<Rational>(cps[0].colliding_eigenvalue), Rational(1, 2));
    EXPECT_EQ(cps[0].disc_multiplicity, 1);
    EXPECT_EQ(cps[0].alg_mult, 2);
    EXPECT_EQ(cps[0].geo_mult, 1);
    EXPECT_EQ(*cps[1].beta.exact, Rational(1));
    EXPECT_EQ(cps[1].kind, CriticalKind::Degeneracy);
    EXPECT_EQ(std::get<Rational>(cps[1].colliding_eigenvalue), Rational(-1));
    EXPECT_EQ(cps[1].disc_multiplicity, 2);
    EXPECT_EQ(cps[1].alg_mult, 2);
    EXPECT_EQ(cps[1].geo_mult, 2);
}

TEST(Critical, DegenerateEverywhere) {
    try {
        critical_points(two_by_two(Matrix<Rational>(2), Matrix<Rational>::identity(2)));
        FAIL() << "expected DegenerateFamilyError";
    } catch (const DegenerateFamilyError& e) {
        EXPECT_NE(std::string(e.what()).find("degenerate family everywhere"), std::string::npos);
    }
}

TEST(Critical, DiagonalCrossing) {
    const auto cps = critical_points(two_by_two(Matrix<Rational>(2), Matrix<Rational>{{1, 0}, {0, -1}}));
    ASSERT_EQ(cps.size(), 1u);
    EXPECT_EQ(*cps[0].beta.exact, Rational(0));
    EXPECT_EQ(cps[0].kind, CriticalKind::Degeneracy);
    EXPECT_EQ(std::get<Rational>(cps[0].colliding_eigenvalue), Rational(0));
}

TEST(Critical, IrrationalExceptionalPoints) {
    // lambda^2 + beta lambda + 1/2: coalescence at beta = +-sqrt 2
    const auto cps = critical_points(two_by_two(Matrix<Rational>{{0, 1}, {Rational(-1, 2), 0}}, Matrix<Rational>{{-1, 0}, {0, 0}}));
    ASSERT_EQ(cps.size(), 2u);
    for (const auto& c : cps) {
        EXPECT_FALSE(c.beta.is_exact());
        EXPECT_NEAR(std::abs(c.beta.approx()), std::sqrt(2.0), 1e-12);
        EXPECT_EQ(c.kind, CriticalKind::Exceptional);
        EXPECT_EQ(c.alg_mult, 2);
        EXPECT_EQ(c.geo_mult, 1);
        EXPECT_NEAR(approx(c.colliding_eigenvalue).re(), -c.beta.approx() / 2, 1e-9);
    }
}

TEST(Critical, IrrationalCrossings) {
    // [[b, 1, 0], [1, 0, 0], [0, 0, 2b]]: the third eigenvalue 2b crosses the pair at b = +-1/sqrt 2
    const AffineFamily fam(Matrix<Rational>{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, Matrix<Rational>{{1, 0, 0}, {0, 0, 0}, {0, 0, 2}});
    const auto cps = critical_points(fam);
    ASSERT_EQ(cps.size(), 2u);
    for (const auto& c : cps) {
        EXPECT_NEAR(std::abs(c.beta.approx()), std::sqrt(0.5), 1e-12);
        EXPECT_EQ(c.kind, CriticalKind::Degeneracy);
        EXPECT_EQ(c.alg_mult, 2);
        EXPECT_EQ(c.geo_mult, 2);
    }
}

TEST(Critical, ClassificationAgreesWithIndependentCheck) {
    oracle::Gen gen(62);
    int exact = 0, interval = 0, degenerate = 0;
    for (int k = 0; k < 80; ++k) {
        const auto fam = gen.family(3 + k % 2);
        std::vector<CriticalPoint> cps;
        try {
            cps = critical_points(fam);
        } catch (const DegenerateFamilyError&) {
            ++degenerate;
            continue;
        }
        for (std::size_t i = 1; i < cps.size(); ++i) EXPECT_LE(cps[i - 1].beta.approx(), cps[i].beta.approx());
        for (const auto& c : cps) {
            EXPECT_EQ(c.kind == CriticalKind::Degeneracy, c.geo_mult == c.alg_mult);
            EXPECT_LT(c.geo_mult, c.alg_mult + 1);
            if (c.beta.is_exact()) {
                ++exact;
                const auto h = fam.at(*c.beta.exact);
                if (is_exact(c.colliding_eigenvalue)) {
                    EXPECT_EQ(static_cast<int>(oracle::exact_nullity(h, std::get<Rational>(c.colliding_eigenvalue))), c.geo_mult);
                } else {
                    EXPECT_EQ(oracle::svd_nullity(h, approx(c.colliding_eigenvalue).value(), 1e-9), c.geo_mult);
                }
            } else {
                ++interval;
                const auto h = fam.at(c.beta.midpoint());
                EXPECT_EQ(std::min(oracle::svd_nullity(h, approx(c.colliding_eigenvalue).value(), 1e-7), c.alg_mult), c.geo_mult);
            }
        }
    }
    EXPECT_GT(exact + interval, 20);
}

TEST(Emit, CsvLayout) {
    const auto fam = AffineFamily::paper();
    const auto branches = sweep(fam, -2, 2, 401);
    const auto cps = critical_points(fam);
    const std::string csv = render_csv(branches, cps);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_GE(lines.size(), 4u);
    EXPECT_EQ(lines[0], "# ep-scan v1");
    EXPECT_EQ(lines[1], "[branches]");
    EXPECT_EQ(lines[2], "beta,branch_id,re,im");
    EXPECT_EQ(lines[3 + 1203], "[criticals]");
    EXPECT_EQ(lines[4 + 1203], "beta,kind,lambda_re,lambda_im,alg_mult,geo_mult,disc_mult");
    EXPECT_EQ(lines[5 + 1203], "-1.25,EXCEPTIONAL,0.5,0,2,1,1");
    EXPECT_EQ(lines[6 + 1203], "1,DEGENERACY,-1,0,2,2,2");
    EXPECT_EQ(lines.size(), 7u + 1203u);

    int minus_one_at_one = 0;
    for (std::size_t i = 3; i < 3 + 1203; ++i)
        if (lines[i].rfind("1,", 0) == 0 && lines[i].find(",-1,0") != std::string::npos) ++minus_one_at_one;
    EXPECT_EQ(minus_one_at_one, 2);

    const std::string no_criticals = render_csv(branches, {});
    EXPECT_EQ(no_criticals.find("[criticals]"), std::string::npos);
    EXPECT_EQ(std::count(no_criticals.begin(), no_criticals.end(), '\n'), 3 + 1203);
    EXPECT_EQ(render_csv(sweep(fam, -2, 2, 401), cps), csv);  // deterministic
}

TEST(Emit, IoErrorsNameThePath) {
    const auto branches = sweep(AffineFamily::paper(), -1, 1, 3);
    try {
        emit_csv(branches, {}, "/nonexistent-dir/out.csv");
        FAIL();
    } catch (const IoError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
    }
    EXPECT_THROW(emit_svg(branches, {}, "/nonexistent-dir/out.svg", PlotPart::Real), IoError);
}

TEST(Emit, SvgShapes) {
    const auto fam = AffineFamily::paper();
    const auto branches = sweep(fam, -2, 2, 401);
    const auto cps = critical_points(fam);

    const std::string re = render_svg(branches, cps, PlotPart::Real);
    EXPECT_EQ(re.rfind("<?xml", 0), 0u);
    EXPECT_NE(re.find("version=\"1.1\""), std::string::npos);
    EXPECT_EQ(re.find("href"), std::string::npos);
    const auto re_lines = polylines(re);
    ASSERT_EQ(re_lines.size(), 3u);
    // two polylines meet at beta = 1 (sample 300)
    int meeting = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) meeting += re_lines[a][300] == re_lines[b][300];
    EXPECT_EQ(meeting, 1);
    EXPECT_EQ(count(re, "class=\"ep\""), 1u);
    EXPECT_EQ(count(re, "class=\"degeneracy\""), 1u);

    const std::string im = render_svg(branches, cps, PlotPart::Imag);
    const auto im_lines = polylines(im);
    ASSERT_EQ(im_lines.size(), 3u);
    const double zero_y = im_lines[0][0].second;  // branch 0 is the real eigenvalue -1
    for (std::size_t k = 0; k < 401; ++k) {
        int off_axis = 0;
        for (const auto& l : im_lines) off_axis += l[k].second != zero_y;
        EXPECT_EQ(off_axis, k < 75 ? 2 : 0) << k;
    }
    EXPECT_EQ(count(im, "class=\"ep\""), 1u);
    EXPECT_EQ(count(im, "class=\"degeneracy\""), 0u);

    const AffineFamily single(Matrix<Rational>{{3}}, Matrix<Rational>(1));
    const auto flat = polylines(render_svg(sweep(single, 0, 1, 10), {}, PlotPart::Real));
    ASSERT_EQ(flat.size(), 1u);
    for (const auto& p : flat[0]) EXPECT_EQ(p.second, flat[0][0].second);

    const std::string sized = render_svg(branches, cps, PlotPart::Real, SvgStyle{800, 300});
    EXPECT_NE(sized.find("width=\"800\" height=\"300\""), std::string::npos);
}
