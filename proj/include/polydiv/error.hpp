#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the polynomial parser; offset is the byte position of the
/// offending character in the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Operands or arguments with incompatible shapes (variable counts,
/// vector lengths, matrix dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A degree budget or declared degree that cannot hold the given data.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure in the integral-formula module.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydiv
