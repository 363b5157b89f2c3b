#include "epscan/roots.hpp"

#include <algorithm>
#include <functional>

#include "epscan/errors.hpp"

namespace epscan {

namespace {

// Divides by the positive content, keeping the sign pattern (Sturm chains
// depend on signs, so primitive_part's sign normalization is not allowed).
RatPoly positive_scale(const RatPoly& p) {
    if (p.is_zero()) return p;
    RatPoly pp = primitive_part(p);
    if (pp.leading().sign() != p.leading().sign()) pp = -pp;
    return pp;
}

int sign_at(const RatPoly& p, const Rational& x) { return p(x).sign(); }

// Bisect an isolating interval with non-root endpoints until it is narrower
// than `width`. Stops early if a bisection point hits the root exactly.
void bisect_to(IsolatedRoot& r, const Rational& width) {
    if (r.is_exact()) return;
    int s_lo = sign_at(r.factor, r.lo);
    while (r.hi - r.lo >= width) {
        const Rational mid = (r.lo + r.hi) / Rational(2);
        const int s_mid = sign_at(r.factor, mid);
        if (s_mid == 0) {
            r.exact = mid;
            r.lo = mid;
            r.hi = mid;
            return;
        }
        if (s_mid == s_lo) {
            r.lo = mid;
        } else {
            r.hi = mid;
        }
    }
}

// Any rational root of an integer polynomial has the form k/lc for an integer
// k, so once the interval is narrower than 1/lc there is at most one candidate.
void detect_rational(IsolatedRoot& r) {
    if (r.is_exact()) return;
    const mpz_class lc = abs(r.factor.leading().num());
    bisect_to(r, Rational(mpz_class(1), lc));
    if (r.is_exact()) return;
    const mpz_class k = floor(r.lo * Rational(lc, mpz_class(1))) + 1;
    const Rational candidate(k, lc);
    if (candidate < r.hi && r.factor(candidate).is_zero()) {
        r.exact = candidate;
        r.lo = candidate;
        r.hi = candidate;
    }
}

bool contains(const IsolatedRoot& interval, const IsolatedRoot& other) {
    // True when the closed hull of `other` meets the open interval.
    return other.hi > interval.lo && other.lo < interval.hi;
}

void isolate_square_free(const RatPoly& f, int multiplicity, const Rational& max_width,
                         std::vector<IsolatedRoot>& out) {
    auto make_exact = [&](const Rational& v) {
        IsolatedRoot r;
        r.exact = v;
        r.lo = v;
        r.hi = v;
        r.multiplicity = multiplicity;
        r.factor = f;
        out.push_back(std::move(r));
    };

    if (f.degree() == 1) {
        make_exact(-f.coeff(0) / f.coeff(1));
        return;
    }

    const auto chain = sturm_sequence(f);
    const Rational bound = cauchy_bound(f);

    std::function<void(const Rational&, const Rational&, int)> split;
    split = [&](const Rational& lo, const Rational& hi, int count) {
        if (count == 0) return;
        if (count == 1) {
            IsolatedRoot r;
            r.lo = lo;
            r.hi = hi;
            r.multiplicity = multiplicity;
            r.factor = f;
            detect_rational(r);
            bisect_to(r, max_width);
            out.push_back(std::move(r));
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        if (f(mid).is_zero()) {
            make_exact(mid);
            // Step away from the root until (mid - e, mid + e] holds only it.
            Rational e = (hi - lo) / Rational(4);
            while (f(mid - e).is_zero() || f(mid + e).is_zero() ||
                   sturm_count(chain, mid - e, mid + e) != 1) {
                e /= Rational(2);
            }
            split(lo, mid - e, sturm_count(chain, lo, mid - e));
            split(mid + e, hi, sturm_count(chain, mid + e, hi));
            return;
        }
        split(lo, mid, sturm_count(chain, lo, mid));
        split(mid, hi, sturm_count(chain, mid, hi));
    };
    split(-bound, bound, sturm_count(chain, -bound, bound));
}

}  // namespace

Rational default_isolation_width() { return Rational(mpz_class(1), mpz_class(1) << 40); }

Rational IsolatedRoot::midpoint() const {
    if (exact) return *exact;
    return (lo + hi) / Rational(2);
}

std::vector<std::pair<RatPoly, int>> square_free_decomposition(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() < 1) return out;
    const RatPoly dp = p.derivative();
    const RatPoly a0 = gcd(p, dp);
    RatPoly b = exact_quotient(p, a0);
    RatPoly c = exact_quotient(dp, a0);
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const RatPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
    }
    return out;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
    std::vector<RatPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(positive_scale(p));
    RatPoly next = positive_scale(p.derivative());
    while (!next.is_zero()) {
        chain.push_back(next);
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        next = positive_scale(-divmod(a, b).remainder);
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = f(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int sturm_count(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_bound(const RatPoly& p) {
    if (p.degree() < 1) return Rational(1);
    const Rational lead = p.leading().abs();
    Rational worst = 0;
    for (int k = 0; k < p.degree(); ++k) {
        const Rational ratio = p.coeff(static_cast<std::size_t>(k)).abs() / lead;
        if (ratio > worst) worst = ratio;
    }
    return Rational(1) + worst;
}

int count_real_roots(const RatPoly& p) {
    if (p.degree() < 1) return 0;
    const RatPoly sf = exact_quotient(p, gcd(p, p.derivative()));
    const Rational bound = cauchy_bound(sf);
    return sturm_count(sturm_sequence(sf), -bound, bound);
}

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& q, const Rational& max_width) {
    if (q.is_zero()) throw DegenerateFamilyError("identically degenerate family");
    std::vector<IsolatedRoot> roots;
    for (const auto& [factor, mult] : square_free_decomposition(q)) {
        isolate_square_free(factor, mult, max_width, roots);
    }

    auto by_value = [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.midpoint() < b.midpoint();
    };
    std::sort(roots.begin(), roots.end(), by_value);

    // Roots of different square-free factors are distinct; shrink intervals
    // until neighbours no longer overlap so the ordering is certified.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
            auto& a = roots[k];
            auto& b = roots[k + 1];
            if (a.hi < b.lo || (a.is_exact() && b.is_exact())) continue;
            if (!a.is_exact() && contains(a, b)) {
                bisect_to(a, a.width() / Rational(2));
                changed = true;
            }
            if (!b.is_exact() && contains(b, a)) {
                bisect_to(b, b.width() / Rational(2));
                changed = true;
            }
        }
        if (changed) std::sort(roots.begin(), roots.end(), by_value);
    }
    return roots;
}

IsolatedRoot refine(IsolatedRoot root, const Rational& max_width) {
    bisect_to(root, max_width);
    return root;
}

}  // namespace epscan
