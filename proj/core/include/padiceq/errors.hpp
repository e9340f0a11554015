#pragma once

#include <stdexcept>
#include <string>

namespace padiceq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, absolute values, job files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix shape mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (zero polynomial, empty max, a = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (char_poly dimension, factoring effort).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace padiceq
