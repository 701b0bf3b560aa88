#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypcurve {

/// Structurally invalid input (zero polynomial where a nonzero one is
/// required, constant-in-w resultant operands, degenerate Blaschke pair).
struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Iteration failed to converge or a residual exceeded its contract.
/// Carries the best iterate(s) available when the failure occurred.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg,
                        std::vector<std::complex<double>> best = {})
      : std::runtime_error(msg), best_iterate(std::move(best)) {}
  std::vector<std::complex<double>> best_iterate;
};

/// Argument outside the mathematical domain (point on or outside the unit
/// circle, pole hit, support point at a pole).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition that is checkable up front.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// API misuse that can never be valid (homogenization target below the
/// total degree, dependent connection functionals).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A numerical result contradicts a structural theorem; signals a
/// classification failure rather than a property of the input.
struct TheoryViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internally inconsistent counts (e.g. a codimension formula producing a
/// non-integer).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedKindError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypcurve
