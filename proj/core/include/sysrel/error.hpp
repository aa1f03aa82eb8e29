#pragma once

#include <stdexcept>
#include <string>

namespace sysrel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a textual input (file format, word, command line) cannot be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when an operation requires a valid transducer and the argument is not.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when an explicit resource budget (states, levels, word lengths) is hit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace sysrel
