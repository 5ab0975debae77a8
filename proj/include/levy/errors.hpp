#pragma once

#include <stdexcept>

namespace levy {

// Invalid argument values: out-of-range parameters, malformed inputs.
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parametrization the library deliberately does not support.
class unsupported_parametrization : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

// Request outside the regime where a quantity is defined (e.g. kappa >= 1/alpha).
class regime_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Degenerate data or numerical failure inside an estimator or experiment.
class estimator_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally unusable input: empty path, empty record set.
class structural_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Filesystem or stream failure.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levy
