#pragma once

#include <stdexcept>
#include <string>

namespace krull {

// Base of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different groups or alphabets.
struct ShapeError : Error {
    using Error::Error;
};

// A symbol required by an operation is missing from an alphabet.
struct AlphabetError : Error {
    using Error::Error;
};

// Input outside the domain of an operation, e.g. a sequence that is not zero-sum.
struct DomainError : Error {
    using Error::Error;
};

// Invalid parameter values.
struct ArgumentError : Error {
    using Error::Error;
};

// A configured search limit was hit; the result would have been incomplete.
struct BoundExceeded : Error {
    using Error::Error;
};

// Fixed-width integer arithmetic overflowed.
struct OverflowError : Error {
    using Error::Error;
};

// A transfer map lacks an assignment or does not preserve zero-sums.
struct MapError : Error {
    using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace krull
