#pragma once

#include <stdexcept>
#include <string>

namespace sexpansion {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct EntryOutOfRange : Error {
  int row, col, value;
  EntryOutOfRange(int row, int col, int value, const std::string& what)
      : Error(what), row(row), col(col), value(value) {}
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct OrderTooLarge : Error {
  int order, cap;
  OrderTooLarge(int order, int cap, const std::string& what)
      : Error(what), order(order), cap(cap) {}
};

struct NotAssociative : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

struct InvalidDecomposition : Error {
  using Error::Error;
};

struct NotResonant : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct AntisymmetryConflict : Error {
  using Error::Error;
};

struct BadPartition : Error {
  using Error::Error;
};

struct BadSubspaceStructure : Error {
  using Error::Error;
};

// Raised if a bracket of retained generators leaves the retained span.
// Cannot fire when the documented preconditions hold.
struct ClosureViolation : Error {
  using Error::Error;
};

struct NotALieAlgebra : Error {
  using Error::Error;
};

struct NotSemisimple : Error {
  using Error::Error;
};

struct NoZeroElement : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line, const std::string& what) : Error(what), line(line) {}
};

struct CountMismatch : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace sexpansion
