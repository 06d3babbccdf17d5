#pragma once

#include <stdexcept>
#include <string>

namespace wakectl {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition was violated: square-root or logarithm
/// domain, momentum-theory induction range, near-wake evaluation.
/// Raised instead of letting NaN propagate into solver line searches.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A parameter or configuration value breaks a documented invariant.
/// The message names the offending key or field.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A scenario, problem or solution file could not be parsed.
/// Message carries file name and line number where available.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Solver failure that is not an ordinary infeasibility report.
class SolverError : public Error {
public:
    using Error::Error;
};

/// File system failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace wakectl
