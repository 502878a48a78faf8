#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atomkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured resource cap.
class CapError : public Error {
 public:
  CapError(std::string const& what, std::string cap_name)
      : Error(what), cap_name_(std::move(cap_name)) {}

  std::string const& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

/// Malformed DFA document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace atomkit
