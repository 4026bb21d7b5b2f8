#pragma once

#include <stdexcept>
#include <string>

namespace superlie {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched ranks, sizes or indices.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its stated preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text or document input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace superlie
