#pragma once

#include <stdexcept>
#include <string>

namespace epscan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible shape (matrix dimension mismatch, dimension cap).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (rational literal, family file, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition does not hold (e.g. vector is not an eigenvector).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The discriminant vanishes identically: eigenvalues collide for every parameter.
class DegenerateFamilyError : public Error {
public:
    using Error::Error;
};

/// The requested structure is numerically ill-posed and the library refuses to guess.
class IllPosedError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Failure reading or writing a file.
class IoError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace epscan
