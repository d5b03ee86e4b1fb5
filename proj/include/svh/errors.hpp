#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svh {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed rule-DSL input. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateRule : public ParseError {
public:
  using ParseError::ParseError;
};

// Thrown by the parser (with a position) and by bracket evaluation on
// family ids the spec does not declare (position 0:0).
class UnknownFamily : public ParseError {
public:
  using ParseError::ParseError;
  explicit UnknownFamily(const std::string& what) : ParseError(0, 0, what) {}
};

class SubspaceNotContained : public Error {
public:
  using Error::Error;
};

class InnerBoundExceedsWindow : public Error {
public:
  using Error::Error;
};

class NotACocycle : public Error {
public:
  using Error::Error;
};

class OutOfWindow : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace svh
