#pragma once

#include <stdexcept>
#include <string>

namespace yf {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (words, spec strings, rationals).
struct parse_error : error {
    using error::error;
};

// A documented precondition of an operation was violated.
struct precondition_error : error {
    using error::error;
};

// A requested enclosure tolerance cannot be certified for this input.
struct tolerance_error : error {
    using error::error;
};

// An internal invariant failed; indicates a bug, never bad user input.
struct internal_error : error {
    using error::error;
};

} // namespace yf
