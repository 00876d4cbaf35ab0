#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynspec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument values: non-finite parameters, broken preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A constraint that cannot determine its unknown (e.g. B_n = 0 leaves the
/// flow speed undetermined).
class DegenerateConstraint : public Error {
 public:
  using Error::Error;
};

/// Pencil with singular leading coefficient; the quadratic eigenproblem
/// collapses to a linear one.
class DegeneratePencil : public Error {
 public:
  using Error::Error;
};

/// A caller violated an API contract (e.g. classify() without the required
/// vanishing-diffusivity limit).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// log|B| requested at a sample where |B| = 0.
class UndefinedLog : public Error {
 public:
  using Error::Error;
};

/// A sweep grid exceeds the configured point cap. Carries the cap that
/// would be required to run the grid.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required)
      : Error(what), required_cap(required) {}
  std::size_t required_cap;
};

/// Filesystem failure (unwritable output path, unreadable config file).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynspec
