#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newtonforge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Errors of substance: bad values, violated preconditions, failed computations.
/// The CLI maps these to exit code 1.
struct DomainError : Error {
    using Error::Error;
};

/// Evaluation at or too close to a pole. The message names the node.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// A point lies outside the validated half-plane of a series or integral.
struct RegionError : DomainError {
    using DomainError::DomainError;
};

/// An iteration or quadrature failed to reach the requested tolerance in budget.
struct ConvergenceError : DomainError {
    using DomainError::DomainError;
};

/// Structurally invalid arguments to an operation (bad counts, missing data).
struct ArgumentError : DomainError {
    using DomainError::DomainError;
};

/// Expression syntax error; `position` is the 0-based offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Malformed invocation (CLI flags, subcommands). The CLI maps these to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

} // namespace newtonforge
