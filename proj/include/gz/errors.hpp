#pragma once

#include <stdexcept>
#include <string>

namespace gz {

/// Base for numerical failures (non-convergence, overflow, singular systems).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : NumericError {
    explicit NonConvergence(const std::string& what) : NumericError(what) {}
};

struct OverflowError : NumericError {
    explicit OverflowError(const std::string& what) : NumericError(what) {}
};

struct SingularMatrix : NumericError {
    explicit SingularMatrix(const std::string& what) : NumericError(what) {}
};

/// Caller violated a documented precondition (bad index, shape mismatch, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input file or JSON document.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gz
