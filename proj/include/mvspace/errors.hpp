#pragma once

#include <stdexcept>
#include <string>

namespace mvspace {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A result coefficient became NaN or infinite.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// |v| >= c
class SuperluminalError : public Error {
 public:
  using Error::Error;
};

// A structural constraint (orthogonality, grade content, on-shell) was broken.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

// Values carrying different speeds of light were combined.
class UnitError : public Error {
 public:
  using Error::Error;
};

class AccuracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvspace
