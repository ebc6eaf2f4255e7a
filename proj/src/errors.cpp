#include "metricsat/errors.hpp"

namespace metricsat {
namespace {

std::string idx(std::size_t v) { return std::to_string(v); }

} // namespace

IndexOutOfRange::IndexOutOfRange(std::size_t index, std::size_t bound)
    : Error("index " + idx(index) + " out of range for " + idx(bound) +
            " points"),
      index(index), bound(bound) {}

AsymmetryError::AsymmetryError(std::size_t i, std::size_t j)
    : Error("asymmetric distance: d(" + idx(i) + "," + idx(j) + ") != d(" +
            idx(j) + "," + idx(i) + ")"),
      i(i), j(j) {}

NonzeroDiagonal::NonzeroDiagonal(std::size_t i)
    : Error("nonzero diagonal entry d(" + idx(i) + "," + idx(i) + ")"), i(i) {}

NonpositiveDistance::NonpositiveDistance(std::size_t i, std::size_t j)
    : Error("nonpositive distance d(" + idx(i) + "," + idx(j) + ")"), i(i),
      j(j) {}

TriangleViolation::TriangleViolation(std::size_t from, std::size_t to,
                                     std::size_t via)
    : Error("triangle inequality violated: d(" + idx(from) + "," + idx(to) +
            ") > d(" + idx(from) + "," + idx(via) + ") + d(" + idx(via) + "," +
            idx(to) + ")"),
      from(from), to(to), via(via) {}

TooFewPoints::TooFewPoints(std::size_t n, std::size_t required)
    : Error("need at least " + idx(required) + " points, got " + idx(n)),
      n(n), required(required) {}

static std::string describe_component(const std::vector<std::size_t> &c) {
  std::string s = "graph is disconnected; component of vertex 0 = {";
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? "," : "") + idx(c[i]);
  return s + "}";
}

DisconnectedGraph::DisconnectedGraph(std::vector<std::size_t> component)
    : Error(describe_component(component)), component(std::move(component)) {}

DuplicateCoordinate::DuplicateCoordinate(std::size_t i, std::size_t j)
    : Error("coordinates " + idx(i) + " and " + idx(j) + " coincide"), i(i),
      j(j) {}

TooFewVertices::TooFewVertices(std::size_t n, std::size_t required)
    : Error("need at least " + idx(required) + " vertices, got " + idx(n)),
      n(n), required(required) {}

InvalidK::InvalidK(std::size_t k, std::size_t r, std::size_t n)
    : Error("invalid k=" + idx(k) + " for r=" + idx(r) + ", n=" + idx(n) +
            " (need r <= k <= n)"),
      k(k), r(r), n(n) {}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error("enumeration needs " + std::to_string(required) +
            " candidates, budget is " + std::to_string(budget)),
      required(required), budget(budget) {}

SizeMismatch::SizeMismatch(std::size_t lhs, std::size_t rhs)
    : Error("point sets differ in size: " + idx(lhs) + " vs " + idx(rhs)),
      lhs(lhs), rhs(rhs) {}

CeilingExceeded::CeilingExceeded(std::size_t n, std::size_t ceiling)
    : Error("n=" + idx(n) + " exceeds the realizability ceiling " +
            idx(ceiling)),
      n(n), ceiling(ceiling) {}

} // namespace metricsat
