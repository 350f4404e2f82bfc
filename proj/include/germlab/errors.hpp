#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germlab {

/// Base of everything this library throws on bad input or failed preconditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands with incompatible dimension, truncation order or variable context.
struct ShapeError : Error {
    using Error::Error;
};

/// A map whose linear part has zero determinant was asked to act invertibly.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// A flow / orbit operation needs a lower-triangular linear part and the
/// generator, as given, does not have one. No change of basis is attempted.
struct NonTriangularError : Error {
    using Error::Error;
};

/// Combinatorial enumeration (minor lists) would exceed the configured limit.
struct SizeLimitError : Error {
    using Error::Error;
};

/// Text input rejected; `position` is a 0-based byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : Error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A structurally well-formed document that violates a semantic rule.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace germlab
