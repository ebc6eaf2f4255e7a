#include "metricsat/lines.hpp"

#include <algorithm>
#include <cassert>

#include "metricsat/errors.hpp"
#include "metricsat/saturation.hpp"

namespace metricsat {

LinearOrder LinearOrder::reversed() const {
  return {std::vector<std::size_t>(order.rbegin(), order.rend())};
}

bool check_order(const DistanceMatrix &d, const LinearOrder &o) {
  const std::size_t n = d.size();
  if (o.order.size() != n)
    throw NotAPermutation("order has " + std::to_string(o.order.size()) +
                          " entries for " + std::to_string(n) + " points");
  std::vector<bool> seen(n, false);
  for (auto p : o.order) {
    if (p >= n || seen[p])
      throw NotAPermutation("order is not a permutation of the points");
    seen[p] = true;
  }
  const auto &v = o.order;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (!betweenness(d, v[a], v[b], v[c]))
          return false;
  return true;
}

std::optional<LinearOrder> reconstruct_line(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  for (std::size_t first = 0; first < n; ++first) {
    LinearOrder candidate;
    candidate.order.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
      if (p != first)
        candidate.order.push_back(p);
    std::sort(candidate.order.begin(), candidate.order.end(),
              [&](std::size_t a, std::size_t b) {
                return d(first, a) < d(first, b);
              });
    bool tie = false;
    for (std::size_t i = 1; i < candidate.order.size(); ++i)
      if (d(first, candidate.order[i - 1]) == d(first, candidate.order[i]))
        tie = true;
    if (tie)
      continue;
    candidate.order.insert(candidate.order.begin(), first);
    if (check_order(d, candidate))
      return candidate;
  }
  return std::nullopt;
}

bool anchor_via_closure(const UniformHypergraph &h) {
  if (h.r() != 3)
    throw OutOfRange("anchors are 3-uniform");
  if (h.n() < 5)
    throw TooFewVertices(h.n(), 5);
  return is_weakly_saturated(h, 6);
}

bool verify_non_anchor_witness(const UniformHypergraph &h,
                               const DistanceMatrix &d) {
  if (h.n() != d.size())
    throw SizeMismatch(h.n(), d.size());
  if (h.r() != 3)
    throw OutOfRange("anchors are 3-uniform");
  for (const auto &e : h.edges())
    if (!middle_of(d, e))
      return false;
  return !reconstruct_line(d).has_value();
}

} // namespace metricsat
