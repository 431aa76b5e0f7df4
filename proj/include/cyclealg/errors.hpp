#pragma once

#include <stdexcept>
#include <string>

namespace cyclealg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cycle index, vertex index or automorphism index out of range.
class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

/// Operands built for different cycle lengths (or different models).
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: wrong dimensions, negative entries, bad shapes.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in exact arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A K0 matrix / homology pair that no nonnegative signature realizes.
class NotRealizableError : public Error {
 public:
  enum class Reason {
    kK0NotRigidType,        // no nonnegative signature has this K0 matrix
    kOutsideHomologyRange,  // K0 fibre nonempty but h is not attained
  };

  NotRealizableError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// A target algebra too small for the requested embedding or enumeration.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported class (e.g. a non-regular embedding handed
/// to the signature decomposer).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Rank bookkeeping along an image cycle does not close up.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// Explicit tower whose capacity condition fails at some level.
class InvalidTowerError : public Error {
 public:
  InvalidTowerError(std::size_t level, const std::string& what)
      : Error(what), level_(level) {}

  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

}  // namespace cyclealg
