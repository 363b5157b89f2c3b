#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "epscan/matrix.hpp"
#include "epscan/spectral.hpp"

namespace epscan {

/**
 * Permutation of {0..n-1}, i -> images[i].
 *
 * Its matrix (perm_matrix) has U[i][images[i]] = 1, so (U c)_i = c_{images[i]}:
 * the cyclic relabeling c' = (c3, c1, c2) is images = {2, 0, 1}.
 */
class Perm {
public:
    explicit Perm(std::vector<std::size_t> images);

    static Perm identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    std::size_t operator[](std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;
    /// Smallest k >= 1 with p^k = identity.
    std::size_t order() const;

    /// One-line notation with 1-based images, e.g. "[3 1 2]".
    std::string str() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
    std::vector<std::size_t> images_;
};

/// The permutation r with perm_matrix(r) = perm_matrix(a) * perm_matrix(b),
/// i.e. r[i] = b[a[i]].
Perm compose(const Perm& a, const Perm& b);

/// Permutation matrix with u_ij = 1 iff j = images[i].
Matrix<Rational> perm_matrix(const Perm& p);

struct SymmetryGroup {
    std::vector<Perm> elements;  // sorted lexicographically; identity first
    std::vector<std::vector<std::size_t>> cayley_table;  // [a][b] = index of compose(a, b)
    std::string label;
    std::vector<Perm> generators;

    std::size_t order() const { return elements.size(); }
};

/// Cayley table of a candidate group; throws PreconditionError("not closed")
/// when closure, identity or inverses fail.
std::vector<std::vector<std::size_t>> verify_group(std::span<const Perm> elements);

/// Structure name for orders up to 8 ("trivial", "C2", "C3", "C2xC2", "C4",
/// "S3", "C6", "D4", "Q8", ...); larger groups get "S<n>" when they are the
/// full symmetric group and "order-<k>" otherwise.
std::string label_group(std::span<const Perm> elements);

/// A smallest generating subset (exhaustive for up to 3 generators).
std::vector<Perm> minimal_generators(std::span<const Perm> elements);

/// Every permutation with U^t m U = m, verified to be a group.
SymmetryGroup invariance_group(const Matrix<Rational>& m);

struct EigenspaceSymmetry {
    SpectralValue eigenvalue;
    bool invariant = true;
};

/// For each eigenvalue of `report`, whether every U in g maps its eigenspace into itself.
std::vector<EigenspaceSymmetry> check_eigenvector_symmetry(const Matrix<Rational>& m, const SymmetryGroup& g,
                                                           const SpectralReport& report,
                                                           const SpectralOptions& options = {});

}  // namespace epscan
