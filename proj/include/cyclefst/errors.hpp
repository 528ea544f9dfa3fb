#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclefst {

// A one-line array that is not a permutation of 1..n. `position` is the
// 1-based index of the first offending entry.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An element argument outside 1..n.
class OutOfRangeError : public std::out_of_range {
 public:
  OutOfRangeError(std::uint64_t value, std::size_t n)
      : std::out_of_range("element " + std::to_string(value) +
                          " outside 1.." + std::to_string(n)),
        value_(value) {}
  std::uint64_t value() const { return value_; }

 private:
  std::uint64_t value_;
};

// Arguments that are individually in range but jointly illegal, e.g. a
// transposition of an element with itself.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed request that the current permutation cannot satisfy, e.g. a
// flip whose endpoints lie on different cycles.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. Line and column are 1-based; column 0 means the
// whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (column ? ", column " + std::to_string(column) : "") +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Broken precondition of an internal tree primitive.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclefst
