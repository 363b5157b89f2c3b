#pragma once

#include <variant>
#include <vector>

#include "epscan/matrix.hpp"
#include "epscan/spectral.hpp"

namespace epscan {

/// v_1 .. v_k with (H - lambda I) v_1 = 0 and (H - lambda I) v_{j+1} = v_j.
template <class S>
struct JordanChain {
    S eigenvalue;
    std::vector<Vector<S>> vectors;

    std::size_t length() const { return vectors.size(); }
};

struct JordanBlock {
    SpectralValue eigenvalue;
    int size = 1;
};

/// transform^-1 * H * transform = jordan. Columns of `transform` are the
/// concatenated chains, in the same order as `blocks`.
template <class S>
struct JordanForm {
    Matrix<S> transform;
    Matrix<S> jordan;
    std::vector<JordanBlock> blocks;
};

/// Exact when every eigenvalue is rational, floating otherwise.
using JordanDecomposition = std::variant<JordanForm<Rational>, JordanForm<CplxF>>;

/**
 * Extends the eigenvector `head` into a Jordan chain by repeatedly solving
 * (m - lambda I) x = v_k, taking the particular solution with every free
 * variable zero, until the system becomes inconsistent or max_len is reached.
 */
JordanChain<Rational> jordan_chain(const Matrix<Rational>& m, const Rational& lambda,
                                   Vector<Rational> head, std::size_t max_len);

JordanChain<CplxF> jordan_chain(const Matrix<CplxF>& m, const CplxF& lambda, Vector<CplxF> head,
                                std::size_t max_len, const SpectralOptions& options = {});

/**
 * Jordan decomposition with verified similarity: H S = S J exactly on the
 * rational path, or ||HS - SJ|| <= 1e-8 ||H|| ||S|| on the floating path.
 *
 * Blocks are sorted by eigenvalue, then by descending size. Throws
 * IllPosedError when a floating eigenvalue lies within 1e-6 of another one,
 * since the Jordan structure is then numerically undecidable.
 */
JordanDecomposition jordan_decomposition(const Matrix<Rational>& m, const SpectralOptions& options = {});

const std::vector<JordanBlock>& blocks_of(const JordanDecomposition& d);

inline bool is_exact(const JordanDecomposition& d) {
    return std::holds_alternative<JordanForm<Rational>>(d);
}

/// Absolute distance below which two eigenvalues count as one cluster.
inline constexpr double kClusterSeparation = 1e-6;

}  // namespace epscan
