#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace metricsat {

/// Base of every error raised by the library. Subclasses carry the indices
/// (or counts) that witness the failure.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  IndexOutOfRange(std::size_t index, std::size_t bound);
  std::size_t index;
  std::size_t bound;
};

// Metric axioms.

class AsymmetryError : public Error {
public:
  AsymmetryError(std::size_t i, std::size_t j);
  std::size_t i, j;
};

class NonzeroDiagonal : public Error {
public:
  explicit NonzeroDiagonal(std::size_t i);
  std::size_t i;
};

class NonpositiveDistance : public Error {
public:
  NonpositiveDistance(std::size_t i, std::size_t j);
  std::size_t i, j;
};

/// d(from,to) > d(from,via) + d(via,to).
class TriangleViolation : public Error {
public:
  TriangleViolation(std::size_t from, std::size_t to, std::size_t via);
  std::size_t from, to, via;
};

class TooFewPoints : public Error {
public:
  TooFewPoints(std::size_t n, std::size_t required);
  std::size_t n, required;
};

class DisconnectedGraph : public Error {
public:
  /// `component` lists the vertices reachable from vertex 0.
  explicit DisconnectedGraph(std::vector<std::size_t> component);
  std::vector<std::size_t> component;
};

class DuplicateCoordinate : public Error {
public:
  DuplicateCoordinate(std::size_t i, std::size_t j);
  std::size_t i, j;
};

/// Raised when a state that the metric axioms rule out is observed anyway.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

// Hypergraphs and saturation.

class OutOfRange : public Error {
public:
  using Error::Error;
};

class TooFewVertices : public Error {
public:
  TooFewVertices(std::size_t n, std::size_t required);
  std::size_t n, required;
};

class InvalidK : public Error {
public:
  InvalidK(std::size_t k, std::size_t r, std::size_t n);
  std::size_t k, r, n;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required, budget;
};

// Orders and witnesses.

class NotAPermutation : public Error {
public:
  using Error::Error;
};

class SizeMismatch : public Error {
public:
  SizeMismatch(std::size_t lhs, std::size_t rhs);
  std::size_t lhs, rhs;
};

// Realizability.

class InconsistentAssignment : public Error {
public:
  using Error::Error;
};

class CeilingExceeded : public Error {
public:
  CeilingExceeded(std::size_t n, std::size_t ceiling);
  std::size_t n, ceiling;
};

} // namespace metricsat
