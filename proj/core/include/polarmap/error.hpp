#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarmap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Terms of different total degree were combined into one form.
class NonHomogeneousError : public Error {
 public:
  NonHomogeneousError(int first, int second)
      : Error("non-homogeneous input: terms of degree " + std::to_string(first) + " and " +
              std::to_string(second)),
        first_(first),
        second_(second) {}
  int first_degree() const noexcept { return first_; }
  int second_degree() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (degree too small,
/// cone input, invalid prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is a cone (hess_f == 0): partials are linearly dependent.
class ConeInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A counting or elimination step hit a degenerate configuration (shared
/// component, all elimination charts fail, rank drop). Callers may retry with
/// fresh random data.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A rational map was evaluated at a point of its base locus.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A coefficient cannot be reduced modulo p (its denominator is divisible by p).
class ReductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace polarmap
