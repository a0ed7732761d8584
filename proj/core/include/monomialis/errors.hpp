#pragma once

#include <stdexcept>
#include <string>

namespace monomialis {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two values that must live on the same variable registry do not.
class RegistryMismatchError : public Error {
public:
  RegistryMismatchError() : Error("operands live on different variable registries") {}
  using Error::Error;
};

/// Checked exponent arithmetic overflowed the exponent type.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configurable resource cap was exceeded (lattice size, matrix entries, ...).
/// Callers are expected to fall back to a cheaper strategy or report the cell
/// as unavailable instead of treating this as a hard failure.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A per-instance time budget ran out before the computation finished.
class BudgetError : public Error {
public:
  using Error::Error;
};

} // namespace monomialis
