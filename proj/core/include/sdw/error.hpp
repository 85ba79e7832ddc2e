#pragma once

#include <stdexcept>
#include <string>

namespace sdw {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad file, violated precondition).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured cap or budget was exhausted before the computation finished.
/// The result is inconclusive, not wrong; `bound()` names the bound that was
/// hit so reports can surface it.
class BoundError : public Error {
 public:
  BoundError(std::string bound, const std::string& what)
      : Error(what), bound_(std::move(bound)) {}
  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

}  // namespace sdw
