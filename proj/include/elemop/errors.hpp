#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elemop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (zero polynomial, height 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  RankError(std::size_t actual, const std::string& what)
      : Error(what), actual_rank(actual) {}
  std::size_t actual_rank;
};

/// Supplied matrices are not a basis of the required space.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a construction failed; the message names the condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's contract (wrong length, wrong dimension).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Generator parameters are infeasible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An internal result contradicts a proven identity; signals a bug upstream.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Valid input outside what the classifier handles (length > 3).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace elemop
