#pragma once

#include <stdexcept>
#include <string>

namespace mbx {

// Base for all library errors. Mathematical validation failures are not
// errors; they are reported as Report entries.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unparsable group syntax.
struct ParseError : Error {
    using Error::Error;
};

// Incompatible dimensions or mismatched presentations.
struct ShapeError : Error {
    using Error::Error;
};

// Required structure missing (degeneracies, connections, Kan fillers, ...)
// or a precondition of an operation violated.
struct StructureError : Error {
    using Error::Error;
};

}  // namespace mbx
