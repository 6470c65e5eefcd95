#pragma once

#include <stdexcept>
#include <string>

namespace logsym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero or by a non-invertible element.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Objects built over different variable contexts were combined.
class ContextError : public Error {
public:
    using Error::Error;
};

/// A value left the coefficient ring of its arena (e.g. a negative power of a
/// plain coordinate, or a field that is not logarithmic where one is needed).
class ArenaError : public Error {
public:
    using Error::Error;
};

/// A precondition on a geometric object failed (form not closed, degenerate
/// two-form, singular system, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace logsym
