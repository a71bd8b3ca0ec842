#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spca {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A text or binary input could not be parsed. Carries the offending
/// location so CLI users can fix their files.
struct ParseError : Error {
    ParseError(const std::string& path, std::size_t line, const std::string& what_arg)
        : Error(path + ":" + std::to_string(line) + ": " + what_arg),
          path(path),
          line(line) {}
    ParseError(const std::string& path, const std::string& what_arg)
        : Error(path + ": " + what_arg), path(path), line(0) {}

    std::string path;
    std::size_t line;  // 1-based; 0 when not line-oriented
};

/// Spectral normalization cannot produce s_1 = 1 together with |A| = 1
/// by pure scaling (s_1 <= 0 or |s_d| > s_1).
struct NormalizeError : Error {
    using Error::Error;
};

/// An iterative solver hit its iteration cap without meeting tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

/// The pre-normalization step vector collapsed to numerical zero.
struct DegenerateStepError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace spca
