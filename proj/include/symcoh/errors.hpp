#pragma once

#include <stdexcept>
#include <string>

namespace symcoh {

/// Caller broke a precondition (e.g. mismatched series orders).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds a configured enumeration or order cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two internal routes that must agree did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symcoh
