#ifndef VOLFILT_ERRORS_HPP
#define VOLFILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace volfilt {

// Base for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model, grid or config violates a structural requirement.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// Time/interval/query argument outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Structure table does not match the model it is being used with.
class StaleTableError : public Error {
 public:
  using Error::Error;
};

// Likelihood or interval collapsed to zero (zero occupation, all-zero
// kernel queries, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Denominator integral has no remaining observation mass.
class StarvationError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (tick files, table files).
class DataError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace volfilt

#endif  // VOLFILT_ERRORS_HPP
