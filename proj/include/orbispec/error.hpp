#pragma once

#include <stdexcept>
#include <string>

namespace orbispec {

// Base class for every error raised by the library. The message always
// names the offending object (index, field, file) so that CLI users can
// locate the problem.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// A cyclotomic sum that was expected to be rational is not.
class NotRationalError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class NotInvariantError : public Error {
public:
  using Error::Error;
};

class NotSublatticeError : public Error {
public:
  using Error::Error;
};

class BoundExceededError : public Error {
public:
  explicit BoundExceededError(std::size_t bound)
      : Error("group closure exceeded bound " + std::to_string(bound)),
        bound_(bound) {}
  std::size_t bound() const { return bound_; }

private:
  std::size_t bound_;
};

// The dimension formula produced a value that is not a nonnegative integer.
class IntegralityFailure : public Error {
public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
public:
  using Error::Error;
};

class AmbientMismatch : public Error {
public:
  using Error::Error;
};

class UnsupportedGroupClass : public Error {
public:
  using Error::Error;
};

class UnknownEntry : public Error {
public:
  using Error::Error;
};

}  // namespace orbispec
