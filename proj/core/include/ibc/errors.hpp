#pragma once

#include <stdexcept>
#include <string>

namespace ibc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a kernel or function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Family or operation parameter violates its stated constraints.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Input data violates a type invariant (non-monotone spectrum, bad matrix, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A caller-visible precondition does not hold (e.g. lambda2 > lambda1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An eigensolver or iteration failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A guard on work size (enumeration, subset search, instance size) tripped.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A truncated eigenvalue list is too short to resolve the requested quantity.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t required)
      : Error(what), required_(required) {}

  /// Minimal number of univariate eigenvalues that would have sufficed, or 0
  /// when unknown.
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ibc
