#pragma once

#include <stdexcept>
#include <string>

namespace simplicode {

// Malformed input: bad field order, invalid support family, length mismatch.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hypothesis required by a closed-form method does not hold.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string hypothesis, const std::string& what)
      : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// The instance is too large for the requested method.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not; always signals a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace simplicode
