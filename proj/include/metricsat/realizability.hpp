#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metricsat/hypergraph.hpp"
#include "metricsat/metric.hpp"

namespace metricsat {

enum class Between : std::uint8_t { Open, Yes, No };

/// Partial knowledge of the betweenness relation on n points: for each
/// triangle and each of its points, whether that point is its middle.
/// [r s t] and [t s r] share one slot.
class MiddleAssignment {
public:
  explicit MiddleAssignment(std::size_t n);

  std::size_t n() const { return n_; }

  /// State of [r s t].
  Between state(std::size_t r, std::size_t s, std::size_t t) const;
  /// Records [r s t] = value. Returns false if the slot already holds the
  /// opposite value.
  bool force(std::size_t r, std::size_t s, std::size_t t, bool value);

  /// Marks `middle` as the middle of `triple`.
  void choose_middle(std::span<const std::size_t> triple, std::size_t middle);
  /// The point marked Yes for `triple`, if any.
  std::optional<std::size_t> middle(std::span<const std::size_t> triple) const;

  Between slot(std::uint64_t triple_rank, std::size_t position) const {
    return slots_[triple_rank * 3 + position];
  }

  friend bool operator==(const MiddleAssignment &,
                         const MiddleAssignment &) = default;

private:
  std::size_t index(std::size_t r, std::size_t s, std::size_t t) const;

  std::size_t n_;
  std::vector<Between> slots_;
};

enum class Propagation { Consistent, Contradiction };

/// Closes `a` under the rules every metric obeys, given that the degenerate
/// triangles are exactly the edges of h:
///  - a non-edge has no middle, an edge has exactly one;
///  - [abc] and [acd] imply [abd] and [bcd] (with the contrapositives).
/// Contradiction when some slot would need to be both Yes and No, a
/// non-edge would acquire a middle, or an edge would lose all three.
Propagation propagate(MiddleAssignment &a, const UniformHypergraph &h);

/// For a total assignment (every edge has a chosen middle), solves
///   maximize eps  s.t.  d(r,m) + d(m,t) = d(r,t) for each edge with middle m,
///                       d(r,s) + d(s,t) >= d(r,t) + eps on every non-edge,
///                       d(i,j) >= eps,  sum d(i,j) = 1
/// exactly, and returns a witness metric (scaled to integers) iff eps > 0.
/// The witness is checked to be a metric whose degenerate triangles are
/// exactly h. Throws InconsistentAssignment when the assignment is not total
/// or propagation refutes it.
std::optional<DistanceMatrix> lp_max_slack(const MiddleAssignment &a,
                                           const UniformHypergraph &h);

enum class MetricStatus { Metric, NonMetric };

struct RealizabilityVerdict {
  MetricStatus status = MetricStatus::NonMetric;
  std::optional<DistanceMatrix> witness;
  /// Search-tree nodes visited.
  std::uint64_t explored = 0;
};

struct RealizabilityOptions {
  /// Largest n accepted; the search is exponential in the edge count.
  std::size_t ceiling = 6;
};

/// Decides whether some metric has exactly the edges of h as its degenerate
/// triangles, by depth-first search over middle assignments with
/// propagation after every choice and an exact LP at the leaves. Throws
/// CeilingExceeded.
RealizabilityVerdict is_metric_hypergraph(const UniformHypergraph &h,
                                          const RealizabilityOptions &options = {});

struct AuditEntry {
  std::string label;
  std::optional<std::size_t> deleted_vertex;
  UniformHypergraph hypergraph;
  RealizabilityVerdict verdict;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  /// Root non-metric and every single-vertex deletion metric.
  bool confirmed = false;
};

/// The 19-edge hypergraph on six vertices (all triples but {3,4,5}) and its
/// six vertex deletions, each decided by is_metric_hypergraph.
AuditReport minimal_nonmetric_audit();

} // namespace metricsat
