#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "epscan/family.hpp"
#include "epscan/roots.hpp"
#include "epscan/spectral.hpp"

namespace epscan {

struct BranchSample {
    double beta;
    CplxF value;
};

/// One continuously tracked eigenvalue trajectory.
struct Branch {
    std::size_t id = 0;
    std::vector<BranchSample> samples;
};

enum class CriticalKind { Degeneracy, Exceptional };

std::string to_string(CriticalKind kind);

struct CriticalPoint {
    IsolatedRoot beta;
    CriticalKind kind = CriticalKind::Degeneracy;
    SpectralValue colliding_eigenvalue;
    int disc_multiplicity = 1;
    int alg_mult = 2;
    int geo_mult = 1;
};

/// The grid point k of `steps` equally spaced samples on [beta_min, beta_max],
/// computed so both endpoints (and exactly representable interior points) are hit exactly.
double grid_point(double beta_min, double beta_max, std::size_t steps, std::size_t k);

/// Eigenvalues of H(beta) repeated by algebraic multiplicity, as floats.
std::vector<CplxF> sample_spectrum(const AffineFamily& fam, double beta, const SpectralOptions& options = {});

/// Assignment of `next` values to the previous ones minimizing total |dE|
/// over all n! permutations; ties go to the lexicographically first permutation.
/// Returns perm with next[perm[b]] continuing branch b.
std::vector<std::size_t> match_branches(const std::vector<CplxF>& previous, const std::vector<CplxF>& next);

/**
 * Samples H(beta) on `steps` equally spaced points and tracks the n eigenvalue
 * branches by optimal assignment. Branch ids follow the sorted order of the
 * first sample.
 */
std::vector<Branch> sweep(const AffineFamily& fam, double beta_min, double beta_max, std::size_t steps,
                          const SpectralOptions& options = {});

/**
 * All real parameters where two or more eigenvalues collide, classified as
 * DEGENERACY (full eigenspace) or EXCEPTIONAL (defective), sorted by beta.
 * Throws DegenerateFamilyError when the discriminant vanishes identically.
 */
std::vector<CriticalPoint> critical_points(const AffineFamily& fam, const SpectralOptions& options = {});

enum class PlotPart { Real, Imag };

struct SvgStyle {
    int width = 640;
    int height = 400;
};

/// Writes the `# ep-scan v1` CSV document. Throws IoError naming the path on I/O failure.
void emit_csv(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
              const std::filesystem::path& path);

/// CSV document as a string (what emit_csv writes).
std::string render_csv(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals);

/// Standalone SVG 1.1 plot of the real or imaginary parts of all branches.
void emit_svg(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
              const std::filesystem::path& path, PlotPart part, const SvgStyle& style = {});

std::string render_svg(const std::vector<Branch>& branches, const std::vector<CriticalPoint>& criticals,
                       PlotPart part, const SvgStyle& style = {});

}  // namespace epscan
