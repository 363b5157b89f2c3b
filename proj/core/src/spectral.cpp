#include "epscan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "epscan/charpoly.hpp"
#include "epscan/family.hpp"
#include "epscan/linalg.hpp"
#include "epscan/roots.hpp"

namespace epscan {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Width for turning an irrational real root into a correctly rounded double.
Rational double_width(const IsolatedRoot& r) {
    const Rational scale = std::max(Rational(1), r.midpoint().abs());
    return scale * Rational(mpz_class(1), mpz_class(1) << 64);
}

// Roots of a cluster come out of double iteration with an error near
// eps^(1/k). Such roots are redone in multiprecision from the exact
// coefficients, doubling the precision until the double values settle.
void polish_clustered(const RatPoly& g, std::vector<std::complex<double>>& z) {
    double scale = 1.0, gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i) {
        scale = std::max(scale, std::abs(z[i]));
        for (std::size_t j = i + 1; j < z.size(); ++j) gap = std::min(gap, std::abs(z[i] - z[j]));
    }
    if (gap >= 1e-4 * scale) return;

    std::vector<mpq_class> coeffs;
    coeffs.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) coeffs.push_back(c.raw());
    auto previous = aberth_refine(coeffs, z, 256);
    for (unsigned long bits = 512; bits <= 4096; bits *= 2) {
        auto next = aberth_refine(coeffs, previous, bits);
        bool settled = true;
        for (std::size_t i = 0; i < next.size(); ++i) {
            const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(next[i]));
            if (std::abs(next[i] - previous[i]) > tol) settled = false;
        }
        previous = std::move(next);
        if (settled) break;
    }
    z = std::move(previous);
}

std::vector<CplxF> complex_pairs(const RatPoly& g, std::size_t count, const SpectralOptions& options) {
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) coeffs.emplace_back(c.to_double(), 0.0);
    auto z = aberth_ehrlich(coeffs, options.aberth);
    polish_clustered(g, z);

    // The `count` non-real roots are those farthest from the real axis.
    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        return std::abs(a.imag()) > std::abs(b.imag());
    });
    z.resize(count);
    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) { return a.imag() > b.imag(); });
    std::vector<std::complex<double>> upper(z.begin(), z.begin() + static_cast<long>(count / 2));
    std::vector<std::complex<double>> lower(z.begin() + static_cast<long>(count / 2), z.end());

    std::vector<CplxF> out;
    out.reserve(count);
    for (const auto& u : upper) {
        auto best = lower.begin();
        for (auto it = lower.begin(); it != lower.end(); ++it) {
            if (std::abs(std::conj(*it) - u) < std::abs(std::conj(*best) - u)) best = it;
        }
        const double re = 0.5 * (u.real() + best->real());
        const double im = 0.5 * (std::abs(u.imag()) + std::abs(best->imag()));
        lower.erase(best);
        out.emplace_back(re, im);
        out.emplace_back(re, -im);
    }
    return out;
}

double numeric_threshold(const Matrix<CplxF>& shifted, const SpectralOptions& options) {
    return options.rank_tol * std::max(norm_inf(shifted), std::numeric_limits<double>::min());
}

}  // namespace

CplxF approx(const SpectralValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return CplxF(r->to_double());
    return std::get<CplxF>(v);
}

bool is_exact(const SpectralValue& v) { return std::holds_alternative<Rational>(v); }

std::string to_string(const SpectralValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    const auto& c = std::get<CplxF>(v);
    if (c.im() == 0.0) return format_double(c.re());
    std::string out = format_double(c.re());
    out += c.im() < 0 ? "-" : "+";
    out += format_double(std::abs(c.im())) + "i";
    return out;
}

bool spectral_less(const SpectralValue& a, const SpectralValue& b) {
    if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) < std::get<Rational>(b);
    const CplxF x = approx(a);
    const CplxF y = approx(b);
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
}

void check_dimension(std::size_t n) {
    if (n > kMaxDimension) {
        throw DimensionError("dimension " + std::to_string(n) + " exceeds the supported maximum of " +
                             std::to_string(kMaxDimension));
    }
}

std::vector<Eigenvalue> polynomial_roots(const RatPoly& p, const SpectralOptions& options) {
    std::vector<Eigenvalue> out;
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        RatPoly rest = factor;
        std::size_t real_irrational = 0;
        for (auto root : isolate_real_roots(factor)) {
            Eigenvalue e;
            e.alg_mult = mult;
            if (root.is_exact()) {
                rest = exact_quotient(rest, RatPoly::linear_factor(*root.exact));
                e.value = *root.exact;
            } else {
                const Rational width = double_width(root);
                root = refine(std::move(root), width);
                e.value = root.is_exact() ? SpectralValue(*root.exact)
                                          : SpectralValue(CplxF(root.midpoint().to_double()));
                ++real_irrational;
            }
            out.push_back(std::move(e));
        }
        const int nonreal = rest.degree() - static_cast<int>(real_irrational);
        if (nonreal > 0) {
            for (const auto& z : complex_pairs(rest, static_cast<std::size_t>(nonreal), options)) {
                Eigenvalue e;
                e.alg_mult = mult;
                e.value = z;
                out.push_back(std::move(e));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Eigenvalue& a, const Eigenvalue& b) { return spectral_less(a.value, b.value); });
    return out;
}

std::vector<Eigenvalue> eigenvalues(const Matrix<Rational>& m, const SpectralOptions& options) {
    check_dimension(m.dim());
    return polynomial_roots(char_poly(m), options);
}

std::vector<Vector<Rational>> eigenspace(const Matrix<Rational>& m, const Rational& lambda) {
    auto basis = linalg::nullspace(m.shifted(lambda));
    if (basis.empty()) {
        throw PreconditionError(lambda.str() + " is not an eigenvalue (H - lambda I is nonsingular)");
    }
    for (auto& v : basis) v = linalg::primitive_integer(v);
    return basis;
}

std::vector<Vector<CplxF>> eigenspace(const Matrix<Rational>& m, const CplxF& lambda,
                                      const SpectralOptions& options) {
    const Matrix<CplxF> h = to_numeric(m);
    const Matrix<CplxF> shifted = h.shifted(lambda);
    auto basis = linalg::nullspace(shifted, numeric_threshold(shifted, options));
    if (basis.empty()) {
        throw PreconditionError("(" + to_string(SpectralValue(lambda)) +
                                ") is not an eigenvalue within the rank tolerance");
    }
    const double scale = std::max(norm_inf(h), 1.0);
    for (auto& v : basis) {
        v = linalg::normalize_unit(v);
        const auto r = shifted.apply(v);
        const double residual = norm_inf<CplxF>(r);
        if (residual > options.residual_tol * scale * norm_inf<CplxF>(v)) {
            throw ConvergenceError("eigenvector residual " + format_double(residual) +
                                       " exceeds tolerance for eigenvalue " + to_string(SpectralValue(lambda)),
                                   residual);
        }
    }
    return basis;
}

SpectralReport analyze(const Matrix<Rational>& m, const SpectralOptions& options) {
    SpectralReport report;
    report.dim = m.dim();
    report.eigenvalues = eigenvalues(m, options);
    report.diagonalizable = true;
    report.backend = Backend::Exact;
    for (auto& e : report.eigenvalues) {
        if (const auto* r = std::get_if<Rational>(&e.value)) {
            e.exact_basis = eigenspace(m, *r);
            e.geo_mult = static_cast<int>(e.exact_basis.size());
        } else {
            report.backend = Backend::Numeric;
            e.numeric_basis = eigenspace(m, std::get<CplxF>(e.value), options);
            e.geo_mult = static_cast<int>(e.numeric_basis.size());
        }
        if (e.geo_mult > e.alg_mult) {
            throw InternalError("geometric multiplicity exceeds algebraic multiplicity for " +
                                to_string(e.value) + "; rank tolerance too loose");
        }
        if (e.geo_mult < e.alg_mult) report.diagonalizable = false;
    }
    return report;
}

double eigenvector_overlap(const Matrix<Rational>& m, const SpectralValue& lambda1,
                           const SpectralValue& lambda2, const SpectralOptions& options) {
    const auto values = eigenvalues(m, options);
    auto locate = [&](const SpectralValue& target) -> const Eigenvalue& {
        const Eigenvalue* best = nullptr;
        double best_dist = 0.0;
        for (const auto& e : values) {
            if (is_exact(target) && e.exact()) {
                if (std::get<Rational>(target) == std::get<Rational>(e.value)) return e;
                continue;
            }
            const double dist = std::abs(approx(target).value() - approx(e.value).value());
            if (best == nullptr || dist < best_dist) {
                best = &e;
                best_dist = dist;
            }
        }
        const double tol = 1e-8 * (1.0 + approx(target).abs());
        if (best == nullptr || best_dist > tol) {
            throw PreconditionError(to_string(target) + " is not an eigenvalue");
        }
        return *best;
    };
    const Eigenvalue& e1 = locate(lambda1);
    const Eigenvalue& e2 = locate(lambda2);
    if (&e1 == &e2) throw PreconditionError("overlap needs two distinct eigenvalues");
    if (e1.alg_mult != 1 || e2.alg_mult != 1) {
        throw PreconditionError("overlap is defined only for simple eigenvalues");
    }
    auto vector_of = [&](const Eigenvalue& e) {
        if (const auto* r = std::get_if<Rational>(&e.value)) {
            return linalg::to_numeric(eigenspace(m, *r).front());
        }
        return eigenspace(m, std::get<CplxF>(e.value), options).front();
    };
    const auto v1 = vector_of(e1);
    const auto v2 = vector_of(e2);
    std::complex<double> inner = 0.0;
    double n1 = 0.0;
    double n2 = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        inner += std::conj(v1[i].value()) * v2[i].value();
        n1 += std::norm(v1[i].value());
        n2 += std::norm(v2[i].value());
    }
    return std::clamp(std::abs(inner) / std::sqrt(n1 * n2), 0.0, 1.0);
}

}  // namespace epscan
