#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rispla {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Node placement the physical model cannot handle (coincident nodes,
/// transmitter in or behind the surface plane).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The phase gradient pushes the reflected ray past grazing; no
/// propagating reflection exists.
class EvanescentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (length mismatch, wrong
/// profile variant for the feature, unsorted threshold list, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No grid point or candidate could be evaluated.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the candidate count exceeds the guard.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string what, double required)
      : std::runtime_error(std::move(what)), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

/// Malformed scenario file. `line()` is 1-based, 0 when the problem is not
/// tied to a single line (missing key).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rispla
