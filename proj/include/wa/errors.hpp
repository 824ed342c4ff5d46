#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between weights of different semirings, or a value outside the
// carrier of its semiring.
class SemiringMismatch : public Error {
 public:
  using Error::Error;
};

// Violated operation precondition (dimension mismatch, unknown letter,
// malformed pump sets, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class LimitExceeded : public ContractError {
 public:
  using ContractError::ContractError;
};

class NotUnambiguous : public ContractError {
 public:
  using ContractError::ContractError;
};

// No factor of the given word maps to an idempotent of the transition monoid.
class NoIdempotentInfix : public Error {
 public:
  NoIdempotentInfix(std::size_t factor, const std::string& what) : Error(what), factor_(factor) {}

  // 1-based index of the offending pumped factor, 0 when not applicable.
  std::size_t factor() const noexcept { return factor_; }

 private:
  std::size_t factor_;
};

// A value sequence did not settle into a recognisable tail within the
// configured horizon.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

}  // namespace wa
