#pragma once

#include <stdexcept>
#include <string>

namespace koorn {

// Base class for everything the library can throw on its own.  Callers that
// want a single catch site can use this; the subclasses exist so tests and
// the CLI can distinguish usage mistakes from genuine verification failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands have incompatible sizes (vector lengths, matrix shapes, weight
// lengths, number of variables).
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// A value is outside the mathematical domain of the operation: division by
// zero, 0^(-k), evaluation at a zero coordinate, and similar.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Parameter tuple violates the admissibility condition for the operator
// family (or the stricter condition required for torus orthogonality).
struct ParamError : Error {
    explicit ParamError(const std::string& what) : Error(what) {}
};

// Exact linear solve met a matrix without full rank.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// A rational evaluation point hit a zero of one of the coefficient
// denominators of the difference operator.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Repeated sampling failed to produce an invertible interpolation system.
struct InterpolationError : Error {
    explicit InterpolationError(const std::string& what) : Error(what) {}
};

// Two distinct weights share an eigenvalue, so triangular back-substitution
// cannot divide.  Only reachable at boundary or inadmissible parameters.
struct DegeneracyError : Error {
    explicit DegeneracyError(const std::string& what) : Error(what) {}
};

// Input claimed to be invariant under the signed-permutation group is not.
struct InvarianceError : Error {
    explicit InvarianceError(const std::string& what) : Error(what) {}
};

// A fit or consistency check was asked for with no usable data points.
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

// A truncated weight denominator factor is numerically zero at a grid
// point; the point must be excluded from quadrature and counted.
struct DegeneratePointError : Error {
    explicit DegeneratePointError(const std::string& what) : Error(what) {}
};

// A redundant internal cross-check failed; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace koorn
