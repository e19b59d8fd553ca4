#pragma once

#include <stdexcept>
#include <string>

namespace zhmat {

// Bad arguments: dimension mismatch, index out of range, malformed input.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A structural check failed: a construction did not verify, or a classified
// object does not have the shape the theory guarantees.
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace zhmat
