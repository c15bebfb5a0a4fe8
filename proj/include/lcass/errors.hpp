#pragma once

#include <stdexcept>
#include <string>

namespace lcass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different coefficient domains, or a value does not
/// belong to the requested domain (e.g. 1/2 parsed as an integer).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix/vector dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the documented range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Leading data of the zero polynomial or zero vector was requested.
class ZeroLeadingTermError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A basis was handed to an operation that needs a certified Groebner
/// basis for the lexicographic elimination order.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two independent routes failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcass
