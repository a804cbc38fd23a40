#pragma once

#include <stdexcept>
#include <string>

namespace geomcrystal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An expression references a variable with no binding.
struct MissingBinding : Error {
  using Error::Error;
};

// Nonpositive value fed to a subtraction-free evaluation, or a zero denominator.
struct DomainError : Error {
  using Error::Error;
};

// A Pluecker coordinate needed as a denominator vanishes at the given point.
struct UndefinedPoint : Error {
  using Error::Error;
};

// Input does not satisfy the structural invariant of the type it claims to be.
struct InvariantViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace geomcrystal
