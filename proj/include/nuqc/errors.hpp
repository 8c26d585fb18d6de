#pragma once

#include <stdexcept>
#include <string>

namespace nuqc {

// Argument or range violations at an API boundary. The CLI maps these to exit 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotFound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that is not Hermitian, unit-trace and PSD within tolerance.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAmplitudes : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric-consistency failures. The CLI maps these to exit 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conditional state requested for a measurement branch of (near) zero weight.
class ZeroProbabilityBranch : public NumericError {
 public:
  using NumericError::NumericError;
};

class InconsistentState : public NumericError {
 public:
  using NumericError::NumericError;
};

class AccuracyError : public NumericError {
 public:
  using NumericError::NumericError;
};

class InternalConsistency : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace nuqc
