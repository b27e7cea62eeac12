#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expandres {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (unit generator, non-square-free ideal, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands live over different variable contexts.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap or numeric range was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The caller asked for the wrong expansion flavour (pendant vs relabel).
class WrongOperation : public Error {
 public:
  using Error::Error;
};

/// A computed result disagrees with a closed-form prediction that should hold.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries a 1-based position.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace expandres
