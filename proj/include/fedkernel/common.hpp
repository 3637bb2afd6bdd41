#pragma once

#include <stdexcept>
#include <string>

namespace fedkernel {

/// Mismatched vector/matrix dimensions in an operation input.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid algorithm or experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Divergent iteration regime (FedAvg with gamma >= 1).
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular or near-singular linear system where the theory needs invertibility.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigensolver or factorization failure.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure while persisting results.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fedkernel
