#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured bound (group order, subgroup count, oracle size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(decorate(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line, std::size_t column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (column > 0) out += "column " + std::to_string(column) + ": ";
    return out + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Input parsed fine but violates the group axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gen
