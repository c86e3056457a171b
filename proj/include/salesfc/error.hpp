#pragma once

#include <stdexcept>

namespace salesfc {

// Input outside a function's mathematical domain (negative sales, rho out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller passed structurally invalid arguments (empty input, size mismatch).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent data read from a file or assembled from a panel.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace salesfc
