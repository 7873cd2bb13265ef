#pragma once

#include <stdexcept>
#include <string>

namespace quadunit {

// Caller handed us something outside an operation's domain (square N, bad
// denominator, value out of range, ...).  Maps to CLI exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal invariant that should hold for every valid input failed.
// Always a bug, never the caller's fault.  Maps to CLI exit code 4.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded computation hit its step cap before converging.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent methods that must agree did not.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quadunit
