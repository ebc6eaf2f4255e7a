#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metricsat/hypergraph.hpp"
#include "metricsat/rational.hpp"

namespace metricsat {

/// Symmetric n x n matrix of exact rational distances. Construction does not
/// validate; call validate_metric (or use a generator, which always returns
/// valid metrics).
class DistanceMatrix {
public:
  explicit DistanceMatrix(std::size_t n);
  DistanceMatrix(std::size_t n, std::vector<Rational> row_major);

  std::size_t size() const { return n_; }

  const Rational &operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }
  Rational &operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

  /// Sets both d(i,j) and d(j,i).
  void set_symmetric(std::size_t i, std::size_t j, const Rational &value);

  friend bool operator==(const DistanceMatrix &,
                         const DistanceMatrix &) = default;

private:
  std::size_t n_;
  std::vector<Rational> d_;
};

/// Returns normally iff the matrix is a metric with positive off-diagonal
/// entries. Throws AsymmetryError, NonzeroDiagonal, NonpositiveDistance or
/// TriangleViolation with the first witness found.
void validate_metric(const DistanceMatrix &d);

/// [r s t]: pairwise distinct and d(r,s) + d(s,t) = d(r,t).
bool betweenness(const DistanceMatrix &d, std::size_t r, std::size_t s,
                 std::size_t t);

/// The point of `triple` lying between the other two, if any.
std::optional<std::size_t> middle_of(const DistanceMatrix &d,
                                     std::span<const std::size_t> triple);

/// All degenerate triangles, as a 3-uniform hypergraph. Throws TooFewPoints
/// for n < 3.
UniformHypergraph degenerate_hypergraph(const DistanceMatrix &d);

/// Unit-length shortest-path metric. Throws DisconnectedGraph.
DistanceMatrix graph_metric(const Graph &g);

/// d(i,j) = |x_i - x_j|. Throws DuplicateCoordinate.
DistanceMatrix line_metric(std::span<const Rational> coords);

/// a,b,c,d -> 0,1,2,3 around a 4-cycle: sides 1, diagonals 2.
DistanceMatrix four_cycle_metric();

/// Shortest-path closure of a random connected graph with positive rational
/// edge weights. A pure function of (n, seed).
DistanceMatrix random_rational_metric(std::size_t n, std::uint64_t seed);

/// Quadruple (alpha, beta, gamma, delta) with [alpha beta gamma] and
/// [alpha gamma delta] but not both [alpha beta delta] and [beta gamma delta].
using MengerViolation = std::array<std::size_t, 4>;

/// Every quadruple breaking the Menger rule; empty on any genuine metric.
std::vector<MengerViolation> check_menger(const DistanceMatrix &d);

} // namespace metricsat
