#pragma once

#include <stdexcept>

namespace superband {

// Mismatched generator counts, shapes, or arities.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation applied outside its mathematical domain (zero alpha,
// non-invertible body, n != k*m, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Even/odd preconditions violated.
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Block-grading violations in supermatrix construction.
struct GradingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Text, JSON, or config parse failures.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace superband
