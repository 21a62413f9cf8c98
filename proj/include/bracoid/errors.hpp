#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bracoid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (non-subgroup, degree mismatch, n = 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run past its configured size limit.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::string what_bound, std::size_t value, std::size_t limit)
      : Error(what_bound + " " + std::to_string(value) + " exceeds bound " + std::to_string(limit)),
        bound_(std::move(what_bound)),
        value_(value),
        limit_(limit) {}

  const std::string& bound() const { return bound_; }
  std::size_t value() const { return value_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string bound_;
  std::size_t value_;
  std::size_t limit_;
};

/// An operation that needs a reduced (faithful) bracoid was given one that is not.
class NotReduced : public Error {
 public:
  using Error::Error;
};

/// Text or JSON that could not be parsed into the expected structure.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Throws BoundExceeded when value > limit.
inline void require_within(const char* what_bound, std::size_t value, std::size_t limit) {
  if (value > limit) throw BoundExceeded(what_bound, value, limit);
}

}  // namespace bracoid
