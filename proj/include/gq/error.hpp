#pragma once

#include <stdexcept>
#include <string>

namespace gq {

// Base error for everything raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, schema violations, non-composable path
// arguments, unknown names. CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that fails a semantic property an operation requires
// (e.g. deriving the complement from a non-involutive table). CLI exit
// code 1.
struct PropertyError : Error {
    using Error::Error;
};

}  // namespace gq
