#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "metricsat/hypergraph.hpp"

namespace metricsat {

/// One closure step: `added` is the only r-subset of the k-set `witness` that
/// was missing before this step.
struct ClosureStep {
  Subset added;
  Subset witness;

  friend bool operator==(const ClosureStep &, const ClosureStep &) = default;
};

/// Replayable record of a closure run.
struct ClosureCertificate {
  UniformHypergraph base;
  std::size_t k;
  std::vector<ClosureStep> steps;
};

struct ClosureResult {
  UniformHypergraph closure;
  ClosureCertificate certificate;
};

struct ClosureOptions {
  /// When set, eligible k-subsets are processed in a seeded random priority
  /// order instead of ascending colex rank. The closure set is the same
  /// either way; only the certificate differs.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Repeatedly adds the missing r-subset of any k-subset that contains exactly
/// C(k,r)-1 current members, until no k-subset qualifies. By default the
/// colex-least qualifying k-subset is always processed first, which makes the
/// certificate canonical. Throws InvalidK unless r <= k <= n.
ClosureResult weak_saturation_closure(const UniformHypergraph &h, std::size_t k,
                                      const ClosureOptions &options = {});

/// Replays the certificate from its base; false on the first illegal step.
bool verify_certificate(const ClosureCertificate &certificate);

/// True iff the closure is complete. For k > n no step is possible, so only
/// the complete hypergraph qualifies. Throws InvalidK for k < r.
bool is_weakly_saturated(const UniformHypergraph &h, std::size_t k);

struct EnumerationOptions {
  /// Maximum number of candidate hypergraphs one enumeration may visit.
  std::uint64_t budget = 1'000'000;
  /// Worker threads; results do not depend on this.
  unsigned jobs = 1;
};

/// C(N, m), saturating at UINT64_MAX.
std::uint64_t count_combinations(std::uint64_t universe, std::uint64_t size);

/// Enumerates every r-uniform hypergraph on n vertices with `size` edges
/// (through the missing edges when that side is smaller) and returns the
/// first one, in colex order of the enumerated side, that is not weakly
/// K^r_k-saturated. Throws BudgetExceeded before doing any work when the
/// enumeration is larger than the budget.
std::optional<UniformHypergraph>
exhaustive_size_check(std::size_t n, std::size_t r, std::size_t k,
                      std::size_t size, const EnumerationOptions &options = {});

/// First saturated hypergraph of the given size in the same enumeration
/// order, if any.
std::optional<UniformHypergraph>
find_saturated_of_size(std::size_t n, std::size_t r, std::size_t k,
                       std::size_t size, const EnumerationOptions &options = {});

/// Smallest edge count of a weakly K^r_k-saturated r-uniform hypergraph on n
/// vertices. Starts from a known saturated size (the star construction for
/// r=3, k=6, otherwise C(n,r)) and steps down while some hypergraph one edge
/// smaller still saturates; saturation is preserved under adding edges, so
/// the first size with no saturated hypergraph ends the search.
std::size_t min_saturation_search(std::size_t n, std::size_t r, std::size_t k,
                                  const EnumerationOptions &options = {});

} // namespace metricsat
