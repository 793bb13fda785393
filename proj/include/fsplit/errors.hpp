#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsplit {

// Bad input or a violated precondition. Maps to CLI exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a ring or cone description.
class parse_error : public usage_error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column)
      : usage_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A step budget or enumeration cap was exhausted. Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsplit
