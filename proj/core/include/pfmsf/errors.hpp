#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfmsf {

/// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or file. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  ParseError(const std::string& what, std::size_t column) : ParseError(what, 0, column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A matrix that does not have the required symmetry or size. Row and column
/// are 1-based positions of the offending cell when one exists.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what, std::size_t row = 0, std::size_t col = 0)
      : Error(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Mathematically invalid request: singular matrix, bad index set, missing
/// indeterminate during evaluation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace pfmsf
