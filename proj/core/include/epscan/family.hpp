#pragma once

#include <string>

#include "epscan/matrix.hpp"
#include "epscan/rational.hpp"

namespace epscan {

/// Dimension cap for every enumeration-based analysis (n! permutations,
/// exhaustive branch matching).
inline constexpr std::size_t kMaxDimension = 8;

/// One-parameter matrix family H(beta) = A + beta * B.
class AffineFamily {
public:
    AffineFamily(Matrix<Rational> a, Matrix<Rational> b, std::string name = {});

    const Matrix<Rational>& constant_part() const { return a_; }
    const Matrix<Rational>& linear_part() const { return b_; }
    std::size_t dim() const { return a_.dim(); }
    const std::string& name() const { return name_; }

    /// Exact A + beta * B.
    Matrix<Rational> at(const Rational& beta) const;

    bool is_constant() const;

    /// The 3x3 model with ones off the diagonal except H[2][0] = beta.
    static AffineFamily paper();

private:
    Matrix<Rational> a_;
    Matrix<Rational> b_;
    std::string name_;
};

inline Matrix<Rational> family_at(const AffineFamily& fam, const Rational& beta) {
    return fam.at(beta);
}

}  // namespace epscan
