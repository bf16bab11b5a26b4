#pragma once

#include <stdexcept>
#include <string>

#include "arith/shape.hpp"

namespace arith {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

/// Labels that are not positive, or arms whose lengths do not match a shape.
class InvalidLabels : public Error {
 public:
  using Error::Error;
};

class DivisibilityViolation : public Error {
 public:
  DivisibilityViolation(Vertex vertex, const std::string& what)
      : Error(what), vertex_(vertex) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

class GcdViolation : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that should be impossible to break was broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the range where a formula or fast path applies.
class RangeError : public Error {
 public:
  using Error::Error;
};

class MissingEntry : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace arith
