#include "epscan/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "epscan/linalg.hpp"

namespace epscan {

namespace {

template <class S>
using Traits = ScalarTraits<S>;

template <class S>
bool is_null(const Vector<S>& v, double tol) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)tol;
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    } else {
        return norm_inf<S>(v) <= tol;
    }
}

// Pivot threshold for rank decisions on `a` (zero on the exact path).
template <class S>
double threshold_for(const Matrix<S>& a, const SpectralOptions& options) {
    if constexpr (std::is_same_v<S, Rational>) {
        (void)a;
        (void)options;
        return 0.0;
    } else {
        return options.rank_tol * std::max(norm_inf(a), std::numeric_limits<double>::min());
    }
}

template <class S>
JordanChain<S> extend_chain(const Matrix<S>& m, const S& lambda, Vector<S> head, std::size_t max_len,
                            const SpectralOptions& options) {
    if (head.size() != m.dim()) throw DimensionError("chain head length does not match matrix dimension");
    const Matrix<S> n = m.shifted(lambda);
    const double scale = std::max(norm_inf(m), 1.0);
    const double head_norm = norm_inf<S>(head);
    if (head_norm == 0.0) throw PreconditionError("chain head must be a nonzero vector");
    if (!is_null(n.apply(head), options.residual_tol * scale * head_norm)) {
        throw PreconditionError("chain head is not an eigenvector for the given eigenvalue");
    }
    JordanChain<S> chain{lambda, {std::move(head)}};
    const double pivot = threshold_for(n, options);
    while (chain.length() < max_len) {
        const Vector<S>& last = chain.vectors.back();
        const double consistency = 100.0 * options.rank_tol * (scale + 1.0) * norm_inf<S>(last);
        auto next = linalg::solve_particular<S>(n, last, pivot, consistency);
        if (!next) break;
        chain.vectors.push_back(std::move(*next));
    }
    return chain;
}

template <class S>
Matrix<S> power(const Matrix<S>& a, std::size_t k) {
    Matrix<S> out = Matrix<S>::identity(a.dim());
    for (std::size_t i = 0; i < k; ++i) out = out * a;
    return out;
}

// Chain scaling: exact chains become primitive integer vectors (one common
// factor for the whole chain, which preserves the chain relations); floating
// chains are scaled so the largest entry has magnitude 1.
void normalize_chain(std::vector<Vector<Rational>>& chain) {
    Vector<Rational> flat;
    for (const auto& v : chain) flat.insert(flat.end(), v.begin(), v.end());
    // primitive_integer fixes the sign by the first nonzero entry of v_1.
    const Vector<Rational> scaled = linalg::primitive_integer(flat);
    Rational factor;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (!flat[i].is_zero()) {
            factor = scaled[i] / flat[i];
            break;
        }
    }
    for (auto& v : chain)
        for (auto& x : v) x *= factor;
}

void normalize_chain(std::vector<Vector<CplxF>>& chain) {
    double largest = 0.0;
    for (const auto& v : chain) largest = std::max(largest, norm_inf<CplxF>(v));
    const CplxF factor(1.0 / largest);
    for (auto& v : chain)
        for (auto& x : v) x *= factor;
}

/**
 * Chains for one eigenvalue of algebraic multiplicity `alg`, built top-down:
 * for each level k, pick vectors of ker N^k independent of ker N^{k-1} and of
 * the level-k vectors already supplied by longer chains, then walk each one
 * down with N. Returned chains are ordered by descending length.
 */
template <class S>
std::vector<std::vector<Vector<S>>> chains_for(const Matrix<S>& m, const S& lambda, int alg,
                                              const SpectralOptions& options) {
    const Matrix<S> n = m.shifted(lambda);
    std::vector<std::vector<Vector<S>>> kernels{{}};  // kernels[k] = basis of ker N^k
    while (static_cast<int>(kernels.back().size()) < alg) {
        const std::size_t k = kernels.size();
        if (static_cast<int>(k) > alg) {
            throw IllPosedError("generalized eigenspace dimension does not reach the algebraic multiplicity");
        }
        const Matrix<S> nk = power(n, k);
        kernels.push_back(linalg::nullspace(nk, threshold_for(nk, options)));
        if (kernels.back().size() < kernels[k - 1].size()) {
            throw IllPosedError("kernel dimensions of (H - lambda I)^k are not monotone");
        }
    }
    if (static_cast<int>(kernels.back().size()) != alg) {
        throw IllPosedError("generalized eigenspace dimension exceeds the algebraic multiplicity");
    }
    const std::size_t top = kernels.size() - 1;
    auto at_least = [&](std::size_t k) {  // number of blocks of size >= k
        return k > top ? std::size_t{0} : kernels[k].size() - kernels[k - 1].size();
    };

    std::vector<Vector<S>> tops;         // chain tops, longest first
    std::vector<std::size_t> top_level;  // their levels
    const double tol = threshold_for(n, options);
    for (std::size_t k = top; k >= 1; --k) {
        const std::size_t wanted = at_least(k) - at_least(k + 1);
        linalg::Rows<S> span(kernels[k - 1].begin(), kernels[k - 1].end());
        for (std::size_t c = 0; c < tops.size(); ++c) {
            span.push_back(power(n, top_level[c] - k).apply(tops[c]));
        }
        std::size_t have = linalg::rank(span, tol);
        std::size_t picked = 0;
        for (const auto& candidate : kernels[k]) {
            if (picked == wanted) break;
            span.push_back(candidate);
            const std::size_t r = linalg::rank(span, tol);
            if (r > have) {
                have = r;
                tops.push_back(candidate);
                top_level.push_back(k);
                ++picked;
            } else {
                span.pop_back();
            }
        }
        if (picked != wanted) throw IllPosedError("could not complete the Jordan chains at level " + std::to_string(k));
    }

    std::vector<std::vector<Vector<S>>> chains;
    for (std::size_t c = 0; c < tops.size(); ++c) {
        std::vector<Vector<S>> chain(top_level[c]);
        Vector<S> v = tops[c];
        for (std::size_t j = top_level[c]; j-- > 0;) {
            chain[j] = v;
            v = n.apply(v);
        }
        normalize_chain(chain);
        chains.push_back(std::move(chain));
    }
    return chains;
}

template <class S>
S value_as(const SpectralValue& v) {
    if constexpr (std::is_same_v<S, Rational>) {
        return std::get<Rational>(v);
    } else {
        return approx(v);
    }
}

template <class S>
JordanForm<S> assemble(const Matrix<Rational>& exact_h, const std::vector<Eigenvalue>& values,
                       const SpectralOptions& options) {
    Matrix<S> h = [&] {
        if constexpr (std::is_same_v<S, Rational>) {
            return exact_h;
        } else {
            return to_numeric(exact_h);
        }
    }();
    const std::size_t n = h.dim();
    std::vector<Vector<S>> columns;
    std::vector<JordanBlock> blocks;
    Matrix<S> j(n);
    for (const auto& e : values) {
        std::vector<std::vector<Vector<S>>> chains;
        if constexpr (std::is_same_v<S, CplxF>) {
            if (e.exact()) {
                // Exact chains, converted afterwards.
                for (const auto& chain : chains_for<Rational>(exact_h, std::get<Rational>(e.value), e.alg_mult, options)) {
                    std::vector<Vector<CplxF>> converted;
                    for (const auto& v : chain) converted.push_back(linalg::to_numeric(v));
                    chains.push_back(std::move(converted));
                }
            } else {
                chains = chains_for<S>(h, value_as<S>(e.value), e.alg_mult, options);
            }
        } else {
            chains = chains_for<S>(h, value_as<S>(e.value), e.alg_mult, options);
        }
        const S lambda = value_as<S>(e.value);
        for (auto& chain : chains) {
            const std::size_t start = columns.size();
            for (std::size_t k = 0; k < chain.size(); ++k) {
                j(start + k, start + k) = lambda;
                if (k > 0) j(start + k - 1, start + k) = Traits<S>::one();
                columns.push_back(std::move(chain[k]));
            }
            blocks.push_back({e.value, static_cast<int>(chain.size())});
        }
    }
    if (columns.size() != n) throw InternalError("Jordan chains do not span the space");
    return {linalg::from_columns(columns), std::move(j), std::move(blocks)};
}

}  // namespace

JordanChain<Rational> jordan_chain(const Matrix<Rational>& m, const Rational& lambda, Vector<Rational> head,
                                   std::size_t max_len) {
    return extend_chain<Rational>(m, lambda, std::move(head), max_len, SpectralOptions{});
}

JordanChain<CplxF> jordan_chain(const Matrix<CplxF>& m, const CplxF& lambda, Vector<CplxF> head,
                                std::size_t max_len, const SpectralOptions& options) {
    return extend_chain<CplxF>(m, lambda, std::move(head), max_len, options);
}

JordanDecomposition jordan_decomposition(const Matrix<Rational>& m, const SpectralOptions& options) {
    const auto values = eigenvalues(m, options);
    const bool all_exact = std::all_of(values.begin(), values.end(), [](const Eigenvalue& e) { return e.exact(); });

    if (all_exact) {
        JordanForm<Rational> form = assemble<Rational>(m, values, options);
        if (m * form.transform != form.transform * form.jordan) {
            throw InternalError("exact Jordan verification failed: H S != S J");
        }
        if (linalg::determinant(form.transform).is_zero()) {
            throw InternalError("exact Jordan transform is singular");
        }
        return form;
    }

    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a + 1; b < values.size(); ++b) {
            if (values[a].exact() && values[b].exact()) continue;
            const double gap = std::abs(approx(values[a].value).value() - approx(values[b].value).value());
            if (gap < kClusterSeparation) {
                throw IllPosedError("ill-posed Jordan structure: eigenvalues " + to_string(values[a].value) +
                                    " and " + to_string(values[b].value) + " are closer than 1e-6");
            }
        }
    }
    const Matrix<CplxF> h = to_numeric(m);
    JordanForm<CplxF> form = assemble<CplxF>(m, values, options);
    const Matrix<CplxF> residual = h * form.transform - form.transform * form.jordan;
    const double bound = 1e-8 * norm_inf(h) * norm_inf(form.transform);
    if (norm_inf(residual) > bound) {
        throw IllPosedError("ill-posed Jordan structure: similarity residual " + std::to_string(norm_inf(residual)) +
                            " exceeds tolerance");
    }
    return form;
}

const std::vector<JordanBlock>& blocks_of(const JordanDecomposition& d) {
    return std::visit([](const auto& f) -> const std::vector<JordanBlock>& { return f.blocks; }, d);
}

}  // namespace epscan
