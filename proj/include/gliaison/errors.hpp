#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gliaison {

// Caller broke an API precondition (mixed rings, wrong shapes, bad flags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid request (inverse of zero, non-prime modulus).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Randomized construction exhausted its reseed budget.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gliaison
