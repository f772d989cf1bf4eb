#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pirank {

/// Base for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed APX or JSON input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Framework larger than the configured argument limit.
class LimitError : public Error {
 public:
  LimitError(std::size_t count, std::size_t limit)
      : Error("framework has " + std::to_string(count) + " arguments, limit is " +
              std::to_string(limit)),
        count_(count),
        limit_(limit) {}

  std::size_t count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

/// Structurally invalid framework, mapping, or argument reference.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownArgument : public InvalidInput {
 public:
  explicit UnknownArgument(const std::string& id) : InvalidInput("unknown argument '" + id + "'") {}
};

/// Raised when a wall-clock budget runs out mid-computation.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded() : Error("computation budget exceeded") {}
};

/// A precondition of the API was broken by the caller (foreign sets, i in S, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pirank
