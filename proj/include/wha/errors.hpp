#pragma once

#include <stdexcept>
#include <string>

namespace wha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two scalars with different indeterminates met in one operation.
struct VariableMismatch : Error {
    using Error::Error;
};

// Evaluation point is a root of the denominator.
struct PoleError : Error {
    using Error::Error;
};

// A word exceeds the degree up to which the rewrite system is confluent.
struct DegreeOverflow : Error {
    using Error::Error;
};

// Completion hit its iteration cap; the message names the offending overlap.
struct CompletionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Basis closure did not terminate, or an element lies outside a basis span.
struct DimensionError : Error {
    using Error::Error;
};

} // namespace wha
