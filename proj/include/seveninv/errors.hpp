#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seveninv {

// Root of every error raised by the library. The CLI maps InputError to exit
// code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public InputError {
 public:
  DivisionByZero() : InputError("division by zero") {}
};

class ConductorMismatch : public InputError {
 public:
  ConductorMismatch(int lhs, int rhs)
      : InputError("conductor mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs)) {}
};

// A defect-sum argument whose summands contain a vanishing sine.
class DegenerateDefect : public InputError {
 public:
  using InputError::InputError;
};

// The pair has n = 0, i.e. infinite H^4; Euler-number based invariants fail.
class DegenerateEuler : public InputError {
 public:
  DegenerateEuler() : InputError("degenerate Euler number: n = 0 (infinite H^4)") {}
};

class InvalidParameters : public InputError {
 public:
  explicit InvalidParameters(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A datum the formulas do not determine (e.g. p1 when gcd(a1, b1) != 1).
class Unavailable : public Error {
 public:
  using Error::Error;
};

// An internal identity failed. Never expected; indicates an arithmetic bug or
// a base pair outside the hypotheses of the construction.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace seveninv
