#pragma once

#include <stdexcept>
#include <string>

namespace troptoda {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// All retained series terms cancelled but zero cannot be certified within
/// the jet window. Retrying with a wider window may resolve it.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Input polynomial has no curve (support is a single point).
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

/// Proposed cycle basis is linearly dependent.
struct SingularBasis : Error {
    explicit SingularBasis(const std::string& what) : Error(what) {}
};

/// Curve failed the smoothness test; message names the failing vertex.
struct NotSmooth : Error {
    explicit NotSmooth(const std::string& what) : Error(what) {}
};

struct PhaseSpaceViolation : Error {
    explicit PhaseSpaceViolation(const std::string& what) : Error(what) {}
};

/// Random lift stayed degenerate after the retry budget.
struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& what) : Error(what) {}
};

/// A sign computation hit a tied lattice argmin; message lists the argument.
struct AmbiguousArgmin : Error {
    explicit AmbiguousArgmin(const std::string& what) : Error(what) {}
};

/// Trisecant sign pattern has no distinguished index.
struct SignPatternInvalid : Error {
    explicit SignPatternInvalid(const std::string& what) : Error(what) {}
};

struct InvalidBeta : Error {
    explicit InvalidBeta(const std::string& what) : Error(what) {}
};

/// Malformed request, flag or JSON input.
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace troptoda
