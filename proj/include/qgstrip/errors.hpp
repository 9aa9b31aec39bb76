#pragma once

#include <stdexcept>
#include <string>

namespace qgstrip {

// Operand shapes incompatible with the requested operation.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its documented range (degree < 2, nonpositive length, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear system singular to working tolerance.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Factorization did not converge or produced non-finite values.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No null vector at the requested tolerance; carries the relative
// sigma_min actually observed.
struct NoModeError : std::runtime_error {
  NoModeError(const std::string& what, double sigma_rel)
      : std::runtime_error(what), sigma_min_rel(sigma_rel) {}
  double sigma_min_rel;
};

// Probability current requested on an edge with zero amplitude.
struct UndefinedCurrentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad CLI flags or config file contents.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qgstrip
