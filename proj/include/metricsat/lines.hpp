#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metricsat/hypergraph.hpp"
#include "metricsat/metric.hpp"

namespace metricsat {

/// A permutation of the points, read left to right.
struct LinearOrder {
  std::vector<std::size_t> order;

  LinearOrder reversed() const;
  friend bool operator==(const LinearOrder &, const LinearOrder &) = default;
};

/// True iff every triple taken in order positions p < q < s satisfies
/// [order[p] order[q] order[s]]. Throws NotAPermutation.
bool check_order(const DistanceMatrix &d, const LinearOrder &o);

/// Searches for an order witnessing that d is isometric to a subset of the
/// line. Each point p is tried as the first element with the rest sorted by
/// strictly increasing d(p, .); a tie rules p out. The smallest such p whose
/// candidate passes check_order wins. This search is complete: a valid order
/// has strictly increasing distances from its first element.
std::optional<LinearOrder> reconstruct_line(const DistanceMatrix &d);

/// Sufficient test for being an anchor: weak K^3_6-saturation. A false
/// result says nothing either way. Throws TooFewVertices for n < 5.
bool anchor_via_closure(const UniformHypergraph &h);

/// True iff every edge of h is degenerate in d and no linear order fits d,
/// which shows that h is not an anchor. Throws SizeMismatch when h and d
/// live on different point sets.
bool verify_non_anchor_witness(const UniformHypergraph &h,
                               const DistanceMatrix &d);

} // namespace metricsat
