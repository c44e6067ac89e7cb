#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dcover {

/// Input outside the mathematical domain of an operation (invalid
/// polarization, mismatched bases, identical lines, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity is only defined under the main theorem's
/// hypotheses and the hypothesis audit failed.
class AuditRefusal : public DomainError {
 public:
  AuditRefusal(const std::string& what, std::vector<std::string> failing)
      : DomainError(what), failing_(std::move(failing)) {}

  const std::vector<std::string>& failing_conditions() const noexcept {
    return failing_;
  }

 private:
  std::vector<std::string> failing_;
};

/// Two independent computations of the same quantity disagreed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcover
