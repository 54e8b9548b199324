#pragma once

#include <stdexcept>
#include <string>

namespace monocone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported range (system index, system count, ...).
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The double description run exceeded its intermediate ray cap.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A formula that was required to be a monotone is not one.
class NotAMonotone : public Error {
 public:
  NotAMonotone(std::string message, std::string violated)
      : Error(std::move(message)), violated_(std::move(violated)) {}

  const std::string& violated() const { return violated_; }

 private:
  std::string violated_;
};

// An internal consistency check failed; indicates a bug, never bad input.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace monocone
