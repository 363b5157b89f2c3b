#pragma once

#include <string>
#include <variant>
#include <vector>

#include "epscan/aberth.hpp"
#include "epscan/complex.hpp"
#include "epscan/matrix.hpp"
#include "epscan/poly.hpp"
#include "epscan/rational.hpp"

namespace epscan {

/// An eigenvalue is exact when it is rational, floating otherwise.
using SpectralValue = std::variant<Rational, CplxF>;

CplxF approx(const SpectralValue& v);
bool is_exact(const SpectralValue& v);
/// Exact rationals as "p/q"; floats with 12 significant digits, e.g. "0.5+0.866025403784i".
std::string to_string(const SpectralValue& v);
/// Ordering by (real part, imaginary part); exact comparison when both are rational.
bool spectral_less(const SpectralValue& a, const SpectralValue& b);

struct SpectralOptions {
    /// Eigenvector residual bound, relative to ||H|| * ||v|| (infinity norms).
    double residual_tol = 1e-10;
    /// Pivots below rank_tol * ||H - lambda I|| count as zero in the numeric backend.
    double rank_tol = 1e-8;
    AberthOptions aberth{};
};

struct Eigenvalue {
    SpectralValue value;
    int alg_mult = 1;
    /// Zero until the eigenspace has been computed (eigenvalues() leaves it unset).
    int geo_mult = 0;
    /// Primitive integer basis; filled for exact eigenvalues.
    std::vector<Vector<Rational>> exact_basis;
    /// Unit-norm basis; filled for floating eigenvalues.
    std::vector<Vector<CplxF>> numeric_basis;

    bool exact() const { return is_exact(value); }
};

enum class Backend { Exact, Numeric };

struct SpectralReport {
    std::size_t dim = 0;
    std::vector<Eigenvalue> eigenvalues;
    bool diagonalizable = false;
    Backend backend = Backend::Exact;
};

/// Throws DimensionError above the supported dimension.
void check_dimension(std::size_t n);

/**
 * Roots of a rational polynomial with multiplicities. Rational roots are
 * extracted exactly and deflated before any float is involved; real
 * irrational roots come from exact interval refinement; the remaining
 * complex roots from Aberth-Ehrlich, paired into exact conjugates.
 */
std::vector<Eigenvalue> polynomial_roots(const RatPoly& p, const SpectralOptions& options = {});

/// Eigenvalues of m (values and algebraic multiplicities only).
std::vector<Eigenvalue> eigenvalues(const Matrix<Rational>& m, const SpectralOptions& options = {});

/// Exact null space of m - lambda I. Throws PreconditionError if lambda is not an eigenvalue.
std::vector<Vector<Rational>> eigenspace(const Matrix<Rational>& m, const Rational& lambda);

/// Numeric null space of m - lambda I with threshold pivoting.
std::vector<Vector<CplxF>> eigenspace(const Matrix<Rational>& m, const CplxF& lambda,
                                      const SpectralOptions& options = {});

/// Full report: eigenvalues, multiplicities, eigenspaces, diagonalizability.
SpectralReport analyze(const Matrix<Rational>& m, const SpectralOptions& options = {});

/// |<v1, v2>| / (|v1| |v2|) for the eigenvectors of two distinct simple eigenvalues.
double eigenvector_overlap(const Matrix<Rational>& m, const SpectralValue& lambda1,
                           const SpectralValue& lambda2, const SpectralOptions& options = {});

}  // namespace epscan
