#pragma once

#include <stdexcept>
#include <string>

namespace majdist {

// Caller passed parameters outside an operation's domain (not a partition,
// containment violated, formula clause undefined, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial division left a nonzero remainder.
class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
  explicit InexactDivision(const std::string& what)
      : std::domain_error("inexact division: " + what) {}
};

// Two evaluation routes that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A brute-force routine was asked for more than its configured size.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace majdist
