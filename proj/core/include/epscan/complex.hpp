#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace epscan {

/// Complex double with finite components. Construction rejects NaN and Inf,
/// so every arithmetic result is checked as well.
class CplxF {
public:
    CplxF() = default;

    CplxF(double re, double im = 0.0) : z_(re, im) { check(); }  // NOLINT(google-explicit-constructor)

    explicit CplxF(std::complex<double> z) : z_(z) { check(); }

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    const std::complex<double>& value() const { return z_; }

    double abs() const { return std::abs(z_); }
    CplxF conj() const { return CplxF(std::conj(z_)); }
    bool is_zero() const { return z_ == std::complex<double>{}; }

    CplxF operator-() const { return CplxF(-z_); }
    CplxF& operator+=(const CplxF& o) { z_ += o.z_; check(); return *this; }
    CplxF& operator-=(const CplxF& o) { z_ -= o.z_; check(); return *this; }
    CplxF& operator*=(const CplxF& o) { z_ *= o.z_; check(); return *this; }
    CplxF& operator/=(const CplxF& o) {
        if (o.is_zero()) throw std::domain_error("complex division by zero");
        z_ /= o.z_;
        check();
        return *this;
    }

    friend CplxF operator+(CplxF a, const CplxF& b) { return a += b; }
    friend CplxF operator-(CplxF a, const CplxF& b) { return a -= b; }
    friend CplxF operator*(CplxF a, const CplxF& b) { return a *= b; }
    friend CplxF operator/(CplxF a, const CplxF& b) { return a /= b; }
    friend bool operator==(const CplxF& a, const CplxF& b) { return a.z_ == b.z_; }

    friend std::ostream& operator<<(std::ostream& os, const CplxF& c) {
        return os << '(' << c.re() << ',' << c.im() << ')';
    }

private:
    void check() const {
        if (!std::isfinite(z_.real()) || !std::isfinite(z_.imag())) {
            throw std::domain_error("non-finite complex value");
        }
    }

    std::complex<double> z_{};
};

}  // namespace epscan
