#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace overshear {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset` is a 0-based character index into the
// parsed string.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, ConstantTermInExponent };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : ParseError(kind, offset, what,
                   what + " at position " + std::to_string(offset)) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  // The message without location.
  const std::string& message() const noexcept { return message_; }

 protected:
  ParseError(Kind kind, std::size_t offset, const std::string& message,
             const std::string& full)
      : Error(full), kind_(kind), offset_(offset), message_(message) {}

 private:
  Kind kind_;
  std::size_t offset_;
  std::string message_;
};

// An exponent polynomial with q(0) != 0.
class ConstantTermError : public Error {
 public:
  using Error::Error;
};

// Exact division left a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

class NonSimpleRoots : public Error {
 public:
  using Error::Error;
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

// Violated precondition that is not covered by a more specific error.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace overshear
