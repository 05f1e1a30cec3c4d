#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (non-unit where a unit is needed,
// mismatched primes, invalid branch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PrimeMismatch : public DomainError {
 public:
  PrimeMismatch(long long p, long long q)
      : DomainError("prime mismatch: " + std::to_string(p) + " vs " + std::to_string(q)) {}
};

// Division by an exact zero.
class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by exact zero") {}
};

// The available digits cannot decide the answer: a value that must be
// nonzero is only known to be 0 + O(p^m), a disc membership needs digits the
// point does not carry, and so on.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// Evaluation point coincides with a pole of the zeta branch.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Branch index rejected: odd branch for zeta use, or k not matched to kappa0.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed serialized input (JSON record, series or samples file).
class FormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace padic
