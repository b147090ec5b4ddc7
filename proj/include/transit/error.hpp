#pragma once

#include <stdexcept>
#include <string>

namespace transit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV / JSON decoding failures).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A domain invariant does not hold (bad network, negative demand, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure failed to reach its fixed point.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace transit
