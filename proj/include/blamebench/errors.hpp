#pragma once

#include <stdexcept>
#include <string>

namespace blamebench {

// Error taxonomy. The CLI maps these to exit codes:
// ConfigError -> 2, DataError -> 3, NumericError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration (bad CLI flags, bad config JSON,
// unknown generator/model/explainer names, out-of-range parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or invalid input data (CSV parse failures, invariant violations).
class DataError : public Error {
 public:
  using Error::Error;
};

// Numeric failures: divergence, singular systems, undefined metric inputs.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Nullification left the instance unchanged; the deletion/preservation
// quotient would divide by zero. Reported explicitly, never silently 0.
class DegenerateNullificationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Boundary search could not bracket the decision boundary within budget.
class NoBoundaryError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace blamebench
