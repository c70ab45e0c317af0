#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpad {

/// Base class for all qpad errors. Construction-time invariant violations
/// use std::invalid_argument instead; these types cover the documented
/// failure modes of library operations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A qubit index is outside the circuit's register.
struct InvalidQubit : Error {
    using Error::Error;
};

/// A symbol string does not decode to a circuit (truncated record, unknown
/// gate symbol, digit out of range, bad operand).
struct MalformedString : Error {
    using Error::Error;
};

/// No identity block pair is registered for the gateset.
struct NoBlockPair : Error {
    using Error::Error;
};

/// A forbidden-adjacency restriction would make the identity blocks illegal.
struct PrecludesEncoding : Error {
    using Error::Error;
};

/// A closure-check sample does not satisfy the promise it is meant to test.
struct SampleOutsidePromise : Error {
    using Error::Error;
};

/// Simulation request beyond the dense statevector cap.
struct TooManyQubits : Error {
    using Error::Error;
};

/// Two circuits with different qubit counts were compared as distributions.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// A supplied reduction produced a word that is not a valid frame-free
/// instance encoding.
struct MalformedReduction : Error {
    using Error::Error;
};

/// Text-format parse failure with source position (1-based). what() carries
/// the formatted position; detail is the bare message for callers that
/// prepend their own location (e.g. a file path).
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    std::string detail;

    ParseError(std::size_t line_, std::size_t column_, std::string detail_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
                detail_),
          line(line_),
          column(column_),
          detail(std::move(detail_)) {}
};

}  // namespace qpad
