#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatype {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class InvalidBlade : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("multivector signatures differ") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("multivector fields differ (real vs complex)") {}
};

// A coefficient violates the multivector invariants: non-finite, or a
// nonzero imaginary part in a real multivector.
class InvalidCoefficient : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& name)
      : Error("unknown check: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Expression or document syntax error. `position` is a 0-based character
// offset into the input (0 for document-level errors).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace quatype
