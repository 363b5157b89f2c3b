#include "epscan/family.hpp"

#include <utility>

namespace epscan {

AffineFamily::AffineFamily(Matrix<Rational> a, Matrix<Rational> b, std::string name)
    : a_(std::move(a)), b_(std::move(b)), name_(std::move(name)) {
    if (a_.dim() != b_.dim()) {
        throw DimensionError("family parts differ in dimension: " + std::to_string(a_.dim()) +
                             " vs " + std::to_string(b_.dim()));
    }
}

Matrix<Rational> AffineFamily::at(const Rational& beta) const {
    if (beta.is_zero()) return a_;
    return a_ + b_.scaled(beta);
}

bool AffineFamily::is_constant() const {
    for (const auto& x : b_.entries()) {
        if (!x.is_zero()) return false;
    }
    return true;
}

AffineFamily AffineFamily::paper() {
    Matrix<Rational> a{{0, 1, 1}, {1, 0, 1}, {0, 1, 0}};
    Matrix<Rational> b(3);
    b(2, 0) = 1;
    return AffineFamily(std::move(a), std::move(b), "paper");
}

}  // namespace epscan
