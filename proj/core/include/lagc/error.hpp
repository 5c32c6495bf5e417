#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagc {

/// Base class for every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different signatures, or an index is out of range.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// An expression has the wrong (or no well-defined) parity for the operation.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input failed (time dependence,
/// non form-like Lagrangian, insufficient boundary flatness, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input did not conform to the grammar. Line and column are 1-based;
/// line is 0 when parsing a single expression outside of a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lagc
