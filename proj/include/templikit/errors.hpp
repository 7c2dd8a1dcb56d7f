#pragma once

#include <stdexcept>
#include <string>

namespace templikit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported ring kinds, invalid ring parameters, invalid ring extensions.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different rings or different vertex sets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes or module data are inconsistent (ill-defined morphisms,
/// wrong dimensions, broken diagrams).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Index or parameter outside the documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Input failed validation and the operation refuses to run on it.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace templikit
