#include "epscan/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "epscan/family.hpp"
#include "epscan/linalg.hpp"

namespace epscan {

Perm::Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
        if (i >= images_.size() || seen[i]) throw PreconditionError("images do not form a bijection");
        seen[i] = true;
    }
}

Perm Perm::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Perm(std::move(inv));
}

std::size_t Perm::order() const {
    // lcm of cycle lengths
    std::vector<bool> seen(images_.size(), false);
    std::size_t result = 1;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t i = s; !seen[i]; i = images_[i]) {
            seen[i] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

std::string Perm::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw DimensionError("composing permutations of different sizes");
    std::vector<std::size_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return Perm(std::move(r));
}

Matrix<Rational> perm_matrix(const Perm& p) {
    Matrix<Rational> u(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) u(i, p[i]) = 1;
    return u;
}

std::vector<std::vector<std::size_t>> verify_group(std::span<const Perm> elements) {
    if (elements.empty()) throw PreconditionError("not closed: empty set");
    std::map<Perm, std::size_t> index;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (!index.emplace(elements[k], k).second) throw PreconditionError("not closed: duplicate element");
    }
    if (!index.contains(Perm::identity(elements.front().size()))) {
        throw PreconditionError("not closed: identity missing");
    }
    std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
        if (!index.contains(elements[a].inverse())) throw PreconditionError("not closed: inverse missing");
        for (std::size_t b = 0; b < elements.size(); ++b) {
            const auto it = index.find(compose(elements[a], elements[b]));
            if (it == index.end()) throw PreconditionError("not closed under composition");
            table[a][b] = it->second;
        }
    }
    return table;
}

namespace {

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

bool is_abelian(std::span<const Perm> g) {
    for (const auto& a : g)
        for (const auto& b : g)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

// Size of the subgroup generated by `gens`, stopping once it exceeds `cap`.
std::size_t generated_size(std::span<const Perm> gens, std::size_t degree, std::size_t cap) {
    std::vector<Perm> frontier{Perm::identity(degree)};
    std::map<Perm, bool> seen{{frontier.front(), true}};
    while (!frontier.empty() && seen.size() <= cap) {
        std::vector<Perm> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                Perm q = compose(p, g);
                if (seen.emplace(q, true).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

std::string label_group(std::span<const Perm> elements) {
    verify_group(elements);
    const std::size_t order = elements.size();
    const std::size_t degree = elements.front().size();
    std::size_t max_elem = 1;
    std::size_t involutions = 0;
    for (const auto& p : elements) {
        const std::size_t o = p.order();
        max_elem = std::max(max_elem, o);
        if (o == 2) ++involutions;
    }
    const bool abelian = is_abelian(elements);
    switch (order) {
        case 1: return "trivial";
        case 2: return "C2";
        case 3: return "C3";
        case 4: return max_elem == 4 ? "C4" : "C2xC2";
        case 5: return "C5";
        case 6: return abelian ? "C6" : "S3";
        case 7: return "C7";
        case 8:
            if (abelian) return max_elem == 8 ? "C8" : (max_elem == 4 ? "C4xC2" : "C2xC2xC2");
            return involutions == 5 ? "D4" : "Q8";
        default: break;
    }
    if (order == factorial(degree)) return "S" + std::to_string(degree);
    return "order-" + std::to_string(order);
}

std::vector<Perm> minimal_generators(std::span<const Perm> elements) {
    const std::size_t order = elements.size();
    const std::size_t degree = elements.front().size();
    std::vector<Perm> candidates;
    for (const auto& p : elements) {
        if (!p.is_identity()) candidates.push_back(p);
    }
    if (candidates.empty()) return {};
    for (const auto& p : candidates) {
        if (p.order() == order) return {p};
    }
    // Full symmetric group: a transposition and an n-cycle (S_n is not cyclic for n >= 3).
    if (order == factorial(degree)) {
        std::vector<std::size_t> swap01(degree), cycle(degree);
        std::iota(swap01.begin(), swap01.end(), std::size_t{0});
        std::swap(swap01[0], swap01[1]);
        for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
        return {Perm(std::move(swap01)), Perm(std::move(cycle))};
    }
    // Exhaustive pair/triple search within a work budget, greedy otherwise.
    constexpr std::size_t kBudget = 2'000'000;
    std::size_t work = 0;
    const std::size_t c = candidates.size();
    for (std::size_t a = 0; a < c && work < kBudget; ++a) {
        for (std::size_t b = a + 1; b < c && work < kBudget; ++b) {
            const Perm pair[] = {candidates[a], candidates[b]};
            work += order;
            if (generated_size(pair, degree, order) == order) return {pair[0], pair[1]};
        }
    }
    if (work < kBudget) {
        for (std::size_t a = 0; a < c && work < kBudget; ++a)
            for (std::size_t b = a + 1; b < c && work < kBudget; ++b)
                for (std::size_t d = b + 1; d < c && work < kBudget; ++d) {
                    const Perm triple[] = {candidates[a], candidates[b], candidates[d]};
                    work += order;
                    if (generated_size(triple, degree, order) == order) return {triple[0], triple[1], triple[2]};
                }
    }
    std::vector<Perm> gens;
    for (const auto& p : candidates) {
        gens.push_back(p);
        const std::size_t size = generated_size(gens, degree, order);
        if (size == order) break;
        if (size == generated_size(std::span<const Perm>(gens.data(), gens.size() - 1), degree, order)) {
            gens.pop_back();
        }
    }
    return gens;
}

SymmetryGroup invariance_group(const Matrix<Rational>& m) {
    const std::size_t n = m.dim();
    check_dimension(n);
    SymmetryGroup g;
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    do {
        // (U^t m U)_{ij} = m_{p^-1(i), p^-1(j)}; equivalently m_{kl} = m_{p(k), p(l)}.
        bool invariant = true;
        for (std::size_t k = 0; k < n && invariant; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
                if (m(k, l) != m(images[k], images[l])) {
                    invariant = false;
                    break;
                }
            }
        }
        if (invariant) g.elements.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));

    g.cayley_table = verify_group(g.elements);
    g.label = label_group(g.elements);
    g.generators = minimal_generators(g.elements);
    return g;
}

std::vector<EigenspaceSymmetry> check_eigenvector_symmetry(const Matrix<Rational>& m, const SymmetryGroup& g,
                                                           const SpectralReport& report,
                                                           const SpectralOptions& options) {
    const double threshold = options.rank_tol * std::max(norm_inf(m), 1.0);
    std::vector<EigenspaceSymmetry> out;
    for (const auto& e : report.eigenvalues) {
        bool invariant = true;
        for (const auto& p : g.elements) {
            if (!invariant) break;
            const Matrix<Rational> u = perm_matrix(p);
            if (e.exact()) {
                for (const auto& v : e.exact_basis) {
                    if (!linalg::in_span(e.exact_basis, u.apply(v))) {
                        invariant = false;
                        break;
                    }
                }
            } else {
                const Matrix<CplxF> un = to_numeric(u);
                for (const auto& v : e.numeric_basis) {
                    if (!linalg::in_span(e.numeric_basis, un.apply(v), threshold)) {
                        invariant = false;
                        break;
                    }
                }
            }
        }
        out.push_back({e.value, invariant});
    }
    return out;
}

}  // namespace epscan
