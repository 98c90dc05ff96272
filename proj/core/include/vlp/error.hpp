#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or spec document. `position` is a byte offset into
/// the text that failed to parse.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Empty or inverted interval, mismatched domains, out-of-domain points.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponent evaluated below 1 (or a gap function below 0).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No finite modular for any admissible scaling.
class NotInSpaceError : public Error {
 public:
  using Error::Error;
};

/// The numerics could not settle a question either way.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A witness could not be realized or failed its own validation.
class WitnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace vlp
