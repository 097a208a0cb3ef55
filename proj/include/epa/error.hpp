#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epa {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: mixed field modes, bad modulus, missing cube root of unity.
class FieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero") {}
};

/// A documented precondition of an operation does not hold (e.g. alpha^3 = 1 where alpha^3 != 1 is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("linear map is not invertible") {}
};

/// A linear map that is not of the form phi_gamma tau^i sigma^j; the message names the failed structural check.
class NotInGroup : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace epa
