#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad type symbol, out-of-range index, non-closed subset...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but exceeds a configured computational bound.
class CapabilityError : public Error {
 public:
  CapabilityError(const std::string& what, std::string bound)
      : Error(what), bound_(std::move(bound)) {}

  /// Name of the bound that was exceeded (e.g. "max-group-order").
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

}  // namespace toric
