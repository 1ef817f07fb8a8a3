#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its documented size bound.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A predimension evaluated to exactly zero: the chosen rational alpha
/// behaves rationally on this instance.
class ExactZeroError : public Error {
 public:
  using Error::Error;
};

/// Structures disagree over the amalgamation base, or an amalgam left the
/// class during a generic build.
class AmalgamationError : public Error {
 public:
  using Error::Error;
};

class NotAResolution : public Error {
 public:
  using Error::Error;
};

class MissingComparator : public Error {
 public:
  using Error::Error;
};

class NonFinitary : public Error {
 public:
  using Error::Error;
};

/// Free-vertex bound for subset enumeration. AMALGAM_BUDGET overrides the
/// default of 20.
int subset_budget();

}  // namespace amalgam
