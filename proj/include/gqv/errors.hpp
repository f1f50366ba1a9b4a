#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built for different dimensions (or qudit vs continuous).
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class RegisterCountMismatch : public SpecMismatch {
 public:
  using SpecMismatch::SpecMismatch;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Synthesis needs the coordinate ring to be a field.
class NonPrimeDimension : public UnsupportedDimension {
 public:
  using UnsupportedDimension::UnsupportedDimension;
};

class NonSymplectic : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Dense oracle refuses operators larger than its d^n budget.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gqv
