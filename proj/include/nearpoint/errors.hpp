#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nearpoint {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure-constant table violates one of the Weil-algebra axioms.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different algebras, manifold dimensions or form degrees.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An element (or matrix) has no inverse over the local ring.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A 2-form is degenerate where a Hamiltonian solve needs it.
class DegenerateFormError : public Error {
 public:
  using Error::Error;
};

/// The request leaves the supported (polynomial) function class.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A well-formed problem file that refers to unknown or ill-typed entities.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem-file or literal text, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nearpoint
