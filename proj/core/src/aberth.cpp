#include "epscan/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "epscan/errors.hpp"

namespace epscan {

namespace {

using cd = std::complex<double>;

struct HornerResult {
    cd value;
    cd derivative;
    double error_bound;
};

HornerResult horner(std::span<const cd> a, cd z) {
    cd p = a.back();
    cd dp = 0.0;
    double bound = std::abs(a.back());
    const double az = std::abs(z);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
        bound = bound * az + std::abs(a[k]);
    }
    return {p, dp, bound * std::numeric_limits<double>::epsilon()};
}

// Complex numbers over mpf_class at a fixed precision. Every intermediate is
// built with the explicit precision since gmpxx would otherwise use the
// process-wide default.
struct MpComplex {
    mpf_class re, im;
};

class MpField {
public:
    explicit MpField(unsigned long bits) : bits_(bits) {}

    mpf_class real(double x) const { return mpf_class(x, bits_); }
    MpComplex make(cd z) const { return {real(z.real()), real(z.imag())}; }
    MpComplex zero() const { return make(0.0); }

    MpComplex add(const MpComplex& a, const MpComplex& b) const {
        return {mpf_class(a.re + b.re, bits_), mpf_class(a.im + b.im, bits_)};
    }
    MpComplex sub(const MpComplex& a, const MpComplex& b) const {
        return {mpf_class(a.re - b.re, bits_), mpf_class(a.im - b.im, bits_)};
    }
    MpComplex mul(const MpComplex& a, const MpComplex& b) const {
        return {mpf_class(a.re * b.re - a.im * b.im, bits_), mpf_class(a.re * b.im + a.im * b.re, bits_)};
    }
    MpComplex div(const MpComplex& a, const MpComplex& b) const {
        const mpf_class den(b.re * b.re + b.im * b.im, bits_);
        return {mpf_class((a.re * b.re + a.im * b.im) / den, bits_),
                mpf_class((a.im * b.re - a.re * b.im) / den, bits_)};
    }
    mpf_class norm(const MpComplex& a) const { return mpf_class(a.re * a.re + a.im * a.im, bits_); }
    bool is_zero(const MpComplex& a) const { return sgn(a.re) == 0 && sgn(a.im) == 0; }

private:
    unsigned long bits_;
};

}  // namespace

std::vector<cd> aberth_refine(std::span<const mpq_class> coeffs, std::vector<cd> start, unsigned long bits,
                              int max_iterations) {
    if (coeffs.empty() || sgn(coeffs.back()) == 0) {
        throw PreconditionError("aberth_refine requires a nonzero leading coefficient");
    }
    const std::size_t d = coeffs.size() - 1;
    if (start.size() != d) throw PreconditionError("aberth_refine needs one starting point per root");
    if (d == 0) return start;

    const MpField f(bits);
    std::vector<mpf_class> a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) a.emplace_back(mpq_class(c / coeffs.back()), bits);
    std::vector<MpComplex> z;
    z.reserve(d);
    for (const auto& s : start) z.push_back(f.make(s));

    // Stop once every correction is below 2^-(bits - 16) relative.
    mpf_class tiny(1, bits);
    mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), 2 * (bits - 16));

    for (int it = 0; it < max_iterations; ++it) {
        bool moved = false;
        for (std::size_t k = 0; k < d; ++k) {
            MpComplex p{a.back(), f.real(0.0)};
            MpComplex dp = f.zero();
            for (std::size_t i = d; i-- > 0;) {
                dp = f.add(f.mul(dp, z[k]), p);
                p = f.mul(p, z[k]);
                p.re = mpf_class(p.re + a[i], bits);
            }
            if (f.is_zero(p) || f.is_zero(dp)) continue;
            const MpComplex ratio = f.div(p, dp);
            MpComplex repulsion = f.zero();
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                const MpComplex diff = f.sub(z[k], z[j]);
                if (f.is_zero(diff)) continue;
                repulsion = f.add(repulsion, f.div(MpComplex{f.real(1.0), f.real(0.0)}, diff));
            }
            MpComplex denom = f.mul(ratio, repulsion);
            denom = {mpf_class(1 - denom.re, bits), mpf_class(-denom.im, bits)};
            if (f.is_zero(denom)) continue;
            const MpComplex step = f.div(ratio, denom);
            z[k] = f.sub(z[k], step);
            const mpf_class scale(1 + f.norm(z[k]), bits);
            if (f.norm(step) > tiny * scale) moved = true;
        }
        if (!moved) break;
    }

    std::vector<cd> out;
    out.reserve(d);
    for (const auto& r : z) out.emplace_back(r.re.get_d(), r.im.get_d());
    return out;
}

std::vector<cd> aberth_ehrlich(std::span<const cd> coeffs, const AberthOptions& options) {
    if (coeffs.empty() || coeffs.back() == cd{}) {
        throw PreconditionError("aberth_ehrlich requires a nonzero leading coefficient");
    }
    const std::size_t d = coeffs.size() - 1;
    if (d == 0) return {};
    std::vector<cd> a(coeffs.begin(), coeffs.end());
    const cd lead = a.back();
    for (auto& c : a) c /= lead;
    if (d == 1) return {-a[0]};

    // Starting points on a circle around the root centroid, with a radius
    // from the Fujiwara-style bound and an irrational angular offset so no
    // starting point sits on a symmetry axis of a real polynomial.
    const cd center = -a[d - 1] / static_cast<double>(d);
    double radius = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / static_cast<double>(d - k)));
    }
    radius = std::max(radius, 1e-3);
    std::vector<cd> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
        z[k] = center + std::polar(radius, angle);
    }

    std::vector<bool> done(d, false);
    std::size_t remaining = d;
    for (int it = 0; it < options.max_iterations && remaining > 0; ++it) {
        for (std::size_t k = 0; k < d; ++k) {
            if (done[k]) continue;
            const HornerResult h = horner(a, z[k]);
            if (std::abs(h.value) <= 4.0 * h.error_bound) {
                done[k] = true;
                --remaining;
                continue;
            }
            const cd ratio = h.value / h.derivative;
            cd repulsion = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            }
            const cd step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                // Derivative vanished at the iterate; nudge it off the critical point.
                z[k] += std::polar(1e-8 * (1.0 + std::abs(z[k])), 1.0 + static_cast<double>(k));
                continue;
            }
            z[k] -= step;
        }
    }

    if (remaining > 0) {
        double worst = 0.0;
        for (std::size_t k = 0; k < d; ++k) worst = std::max(worst, std::abs(horner(a, z[k]).value));
        throw ConvergenceError("Aberth-Ehrlich iteration did not converge after " +
                                   std::to_string(options.max_iterations) +
                                   " iterations; worst residual |p(z)| = " + std::to_string(worst),
                               worst);
    }
    return z;
}

}  // namespace epscan
