#pragma once

#include <stdexcept>
#include <string>

namespace ordconic {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller violated a documented precondition (co-conic input, duplicate
/// points, bad generator parameters, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// A point file could not be parsed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A randomized search (generic coflat, chart) ran out of retries.
/// Carries the witness of the last failed verification.
class RetryExhausted : public Error {
public:
    explicit RetryExhausted(const std::string& msg) : Error(msg) {}
};

/// An invariant that should be unreachable was violated; indicates a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

/// Numeric residuals exceeded the configured tolerance; retry with more
/// precision bits.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

} // namespace ordconic
