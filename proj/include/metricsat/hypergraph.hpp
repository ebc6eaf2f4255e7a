#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace metricsat {

/// A sorted set of distinct vertex indices.
using Subset = std::vector<std::size_t>;

/// Largest ground set the ranked lattice supports.
inline constexpr std::size_t kMaxVertices = 64;

/// C(n, k) for n <= 64; zero when k > n.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Colexicographic rank of an r-subset: sum over i of C(s_i, i+1) with the
/// elements sorted ascending. Adding vertices never renumbers existing ranks.
/// Throws OutOfRange if an element is >= n or repeated.
std::uint64_t rank(std::span<const std::size_t> subset, std::size_t n);

/// Inverse of rank. Throws OutOfRange unless rank < C(n, r).
Subset unrank(std::uint64_t rank, std::size_t n, std::size_t r);

/// Advances a sorted subset of {0..n-1} to its colex successor. Returns false
/// (leaving the subset unspecified) after the last one.
bool next_colex(Subset &subset, std::size_t n);

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Normalises endpoints to (min, max); rejects loops, duplicates and
  /// out-of-range endpoints.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);
  Graph() = default;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

/// r-uniform hypergraph on {0..n-1}, stored as a bitset over colex ranks.
class UniformHypergraph {
public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  UniformHypergraph(std::size_t n, std::size_t r);
  UniformHypergraph(std::size_t n, std::size_t r, Bits bits);

  static UniformHypergraph complete(std::size_t n, std::size_t r);
  static UniformHypergraph from_edges(std::size_t n, std::size_t r,
                                      const std::vector<Subset> &edges);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::uint64_t universe_size() const { return bits_.size(); }
  std::size_t edge_count() const { return bits_.count(); }
  bool is_complete() const { return bits_.all(); }
  bool empty() const { return bits_.none(); }

  bool contains(std::uint64_t rank) const { return bits_.test(rank); }
  bool contains(std::span<const std::size_t> edge) const;
  void insert(std::uint64_t rank) { bits_.set(rank); }
  void insert(std::span<const std::size_t> edge);
  void erase(std::uint64_t rank) { bits_.reset(rank); }

  /// Edge ranks in ascending colex order.
  std::vector<std::uint64_t> edge_ranks() const;
  /// Edges in ascending colex order.
  std::vector<Subset> edges() const;

  const Bits &bits() const { return bits_; }
  bool is_subset_of(const UniformHypergraph &other) const;

  /// Induced hypergraph on V - {v}; vertices above v shift down by one.
  UniformHypergraph delete_vertex(std::size_t v) const;
  /// Image under the vertex map i -> perm[i].
  UniformHypergraph relabel(std::span<const std::size_t> perm) const;

  friend bool operator==(const UniformHypergraph &,
                         const UniformHypergraph &) = default;

private:
  std::size_t n_;
  std::size_t r_;
  Bits bits_;
};

UniformHypergraph complement(const UniformHypergraph &h);

/// All 3-subsets of {0..n-1} meeting {0,1,2}. Requires n >= 5.
UniformHypergraph star_construction(std::size_t n);

/// Vertices 0..n-1 stand for 1..n: edges {1,3},{1,4},{2,3},{2,4} and the
/// path 4-5-...-n. Requires n >= 5.
Graph theta_graph(std::size_t n);

} // namespace metricsat
