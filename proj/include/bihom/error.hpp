#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars of different fields.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Division by zero (or inversion of a residue divisible by p).
struct DivisionByZero : Error {
    using Error::Error;
};

/// Shape disagreement between operands.
struct DimMismatch : Error {
    using Error::Error;
};

/// A map required to be bijective is not invertible.
struct Singular : Error {
    using Error::Error;
};

/// A named product/comultiplication/map is absent from a bundle.
struct MissingComponent : Error {
    using Error::Error;
};

/// A twisting map fails to be a morphism of the input structure.
struct NotAMorphism : Error {
    using Error::Error;
};

/// Two maps required to commute do not.
struct NonCommutingMaps : Error {
    using Error::Error;
};

/// A construction hypothesis fails; the message names it with a witness.
struct HypothesisFailed : Error {
    using Error::Error;
};

/// Coboundary construction applied to a non-central r.
struct CentralityFailed : Error {
    using Error::Error;
};

/// An operation requiring A(r) = 0 applied to a non-solution.
struct AybeFailed : Error {
    using Error::Error;
};

/// r is not fixed by alpha x alpha or beta x beta; message names the map.
struct InvarianceFailed : Error {
    using Error::Error;
};

/// An enumeration whose candidate count exceeds the configured ceiling.
struct SpaceTooLarge : Error {
    using Error::Error;
};

/// Malformed bundle text; carries 1-based line and column.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

/// Structurally invalid bundle data (bad index, duplicate entry, ...).
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace bihom
