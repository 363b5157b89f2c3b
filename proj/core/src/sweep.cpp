#include "epscan/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "epscan/charpoly.hpp"
#include "epscan/linalg.hpp"

namespace epscan {

namespace {

constexpr std::size_t kMaxSteps = 1'000'000;

struct Cluster {
    std::vector<CplxF> members;
    CplxF center;
};

// Groups values closer than `tol` (transitively). Only clusters with at least
// two members are returned.
std::vector<Cluster> collisions(const std::vector<CplxF>& values, double tol) {
    const std::size_t n = values.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (std::abs(values[a].value() - values[b].value()) < tol) parent[find(a)] = find(b);

    std::vector<Cluster> out;
    std::vector<bool> done(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t root = find(a);
        if (done[root]) continue;
        done[root] = true;
        Cluster c;
        std::complex<double> sum = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            if (find(b) == root) {
                c.members.push_back(values[b]);
                sum += values[b].value();
            }
        }
        if (c.members.size() < 2) continue;
        c.center = CplxF(sum / static_cast<double>(c.members.size()));
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t numeric_nullity(const Matrix<CplxF>& a, double threshold) {
    return a.dim() - linalg::rank(linalg::to_rows(a), threshold);
}

// Classification at an irrational critical parameter: evaluate at the interval
// midpoint, find the eigenvalues that are about to collide, and read the
// geometric multiplicity from a numeric rank that must not change when the
// threshold moves by a factor of 10 either way. Refines the interval otherwise.
std::vector<CriticalPoint> classify_interval(const AffineFamily& fam, IsolatedRoot root,
                                             const SpectralOptions& options) {
    constexpr int kMaxRefinements = 6;
    const Rational shrink(mpz_class(1), mpz_class(1) << 20);
    for (int attempt = 0; attempt <= kMaxRefinements; ++attempt) {
        if (attempt > 0) root = refine(std::move(root), root.width() * shrink);
        const Matrix<Rational> h = fam.at(root.midpoint());
        const Matrix<CplxF> hn = to_numeric(h);
        std::vector<CplxF> values;
        for (const auto& e : eigenvalues(h, options)) {
            for (int k = 0; k < e.alg_mult; ++k) values.push_back(approx(e.value));
        }
        const double scale = std::max(norm_inf(hn), 1.0);
        const auto clusters = collisions(values, 1e-4 * scale);
        if (clusters.empty()) continue;

        std::vector<CriticalPoint> out;
        bool stable = true;
        for (const auto& c : clusters) {
            const Matrix<CplxF> shifted = hn.shifted(c.center);
            const double tau = options.rank_tol * std::max(norm_inf(shifted), std::numeric_limits<double>::min());
            const std::size_t nullity = numeric_nullity(shifted, tau);
            if (nullity != numeric_nullity(shifted, 10.0 * tau) || nullity != numeric_nullity(shifted, 0.1 * tau)) {
                stable = false;
                break;
            }
            CriticalPoint cp;
            cp.beta = root;
            cp.alg_mult = static_cast<int>(c.members.size());
            cp.geo_mult = static_cast<int>(std::min<std::size_t>(nullity, c.members.size()));
            cp.kind = cp.geo_mult < cp.alg_mult ? CriticalKind::Exceptional : CriticalKind::Degeneracy;
            cp.colliding_eigenvalue = c.center;
            cp.disc_multiplicity = root.multiplicity;
            out.push_back(std::move(cp));
        }
        if (stable) return out;
    }
    throw IllPosedError("could not classify the critical point near beta = " + std::to_string(root.approx()) +
                        ": rank decision unstable under refinement");
}

}  // namespace

std::string to_string(CriticalKind kind) {
    return kind == CriticalKind::Exceptional ? "EXCEPTIONAL" : "DEGENERACY";
}

double grid_point(double beta_min, double beta_max, std::size_t steps, std::size_t k) {
    const double last = static_cast<double>(steps - 1);
    const double kk = static_cast<double>(k);
    return (beta_min * (last - kk) + beta_max * kk) / last;
}

std::vector<CplxF> sample_spectrum(const AffineFamily& fam, double beta, const SpectralOptions& options) {
    std::vector<CplxF> values;
    for (const auto& e : eigenvalues(fam.at(Rational::from_double(beta)), options)) {
        for (int k = 0; k < e.alg_mult; ++k) values.push_back(approx(e.value));
    }
    return values;
}

std::vector<std::size_t> match_branches(const std::vector<CplxF>& previous, const std::vector<CplxF>& next) {
    if (previous.size() != next.size()) throw DimensionError("branch count changed between samples");
    std::vector<std::size_t> perm(next.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t b = 0; b < perm.size(); ++b) cost += std::abs(previous[b].value() - next[perm[b]].value());
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Branch> sweep(const AffineFamily& fam, double beta_min, double beta_max, std::size_t steps,
                          const SpectralOptions& options) {
    check_dimension(fam.dim());
    if (!(beta_min < beta_max)) throw PreconditionError("sweep range must satisfy beta_min < beta_max");
    if (steps < 2 || steps > kMaxSteps) throw PreconditionError("sweep steps must lie in [2, 1000000]");

    std::vector<std::vector<CplxF>> spectra(steps);
    const std::size_t workers =
        steps >= 256 ? std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16)) : 1;
    if (workers == 1) {
        for (std::size_t k = 0; k < steps; ++k) spectra[k] = sample_spectrum(fam, grid_point(beta_min, beta_max, steps, k), options);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < steps; k += workers) {
                        spectra[k] = sample_spectrum(fam, grid_point(beta_min, beta_max, steps, k), options);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    const std::size_t n = fam.dim();
    std::vector<Branch> branches(n);
    for (std::size_t b = 0; b < n; ++b) {
        branches[b].id = b;
        branches[b].samples.reserve(steps);
    }
    std::vector<CplxF> current = spectra.front();
    for (std::size_t k = 0; k < steps; ++k) {
        if (k > 0) {
            const auto perm = match_branches(current, spectra[k]);
            for (std::size_t b = 0; b < n; ++b) current[b] = spectra[k][perm[b]];
        }
        const double beta = grid_point(beta_min, beta_max, steps, k);
        for (std::size_t b = 0; b < n; ++b) branches[b].samples.push_back({beta, current[b]});
    }
    return branches;
}

std::vector<CriticalPoint> critical_points(const AffineFamily& fam, const SpectralOptions& options) {
    check_dimension(fam.dim());
    const RatPoly disc = discriminant_in_beta(char_poly_family(fam));
    if (disc.is_zero()) throw DegenerateFamilyError("degenerate family everywhere: the discriminant vanishes identically");

    std::vector<CriticalPoint> out;
    for (auto& root : isolate_real_roots(disc)) {
        if (!root.is_exact()) {
            for (auto& cp : classify_interval(fam, root, options)) out.push_back(std::move(cp));
            continue;
        }
        const SpectralReport report = analyze(fam.at(*root.exact), options);
        bool found = false;
        for (const auto& e : report.eigenvalues) {
            if (e.alg_mult < 2) continue;
            found = true;
            CriticalPoint cp;
            cp.beta = root;
            cp.alg_mult = e.alg_mult;
            cp.geo_mult = e.geo_mult;
            cp.kind = e.geo_mult < e.alg_mult ? CriticalKind::Exceptional : CriticalKind::Degeneracy;
            cp.colliding_eigenvalue = e.value;
            cp.disc_multiplicity = root.multiplicity;
            out.push_back(std::move(cp));
        }
        if (!found) throw InternalError("discriminant root " + root.exact->str() + " has no repeated eigenvalue");
    }
    return out;
}

}  // namespace epscan
