#pragma once

#include <stdexcept>
#include <string>

namespace ellmean {

/// Argument outside an operation's domain (r = 1 for K, nonpositive pair, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A truncated series failed to meet its tolerance within max_terms.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Log-log power-law fit residuals too large; signals a catalog bug.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracketing failed; signals a theta bug.
class RootError : public std::runtime_error {
 public:
  explicit RootError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer evaluation exceeded the backend width.  Unreachable with the
/// arbitrary-precision backend; kept so callers can still catch it.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ellmean
