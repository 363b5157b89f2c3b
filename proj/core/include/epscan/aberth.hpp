#pragma once

#include <complex>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace epscan {

struct AberthOptions {
    int max_iterations = 500;
};

/**
 * All complex roots of a polynomial (ascending coefficients, nonzero leading
 * coefficient) by Aberth-Ehrlich simultaneous iteration.
 *
 * Intended for square-free input. Each root is accepted once |p(z)| is within
 * a small multiple of the rounding-error bound of Horner evaluation at z.
 * Throws ConvergenceError, carrying the worst residual, if some root has not
 * converged after max_iterations sweeps.
 */
std::vector<std::complex<double>> aberth_ehrlich(std::span<const std::complex<double>> coeffs,
                                                 const AberthOptions& options = {});

/**
 * Polishes approximate roots of a square-free polynomial with exact rational
 * coefficients by running the same iteration in `bits`-bit floating point.
 * Roots come back in the order of `start`. Stops after max_iterations sweeps
 * without throwing; callers judge the result by repeating at higher precision.
 */
std::vector<std::complex<double>> aberth_refine(std::span<const mpq_class> coeffs,
                                                std::vector<std::complex<double>> start, unsigned long bits,
                                                int max_iterations = 200);

}  // namespace epscan
