#include "metricsat/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "metricsat/errors.hpp"

namespace metricsat {
namespace {

using BinomialTable =
    std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

BinomialTable make_binomials() {
  BinomialTable t{};
  for (std::size_t n = 0; n <= kMaxVertices; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
      t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

const BinomialTable kBinomials = make_binomials();

void check_ground_set(std::size_t n, std::size_t r) {
  if (n > kMaxVertices)
    throw OutOfRange("ground set of size " + std::to_string(n) +
                     " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  if (r > n)
    throw OutOfRange("uniformity r=" + std::to_string(r) + " exceeds n=" +
                     std::to_string(n));
}

} // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (n > kMaxVertices)
    throw OutOfRange("binomial(" + std::to_string(n) + ", ...) too large");
  return k > n ? 0 : kBinomials[n][k];
}

std::uint64_t rank(std::span<const std::size_t> subset, std::size_t n) {
  Subset sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw OutOfRange("subset has a repeated element");
  if (!sorted.empty() && sorted.back() >= n)
    throw OutOfRange("subset element " + std::to_string(sorted.back()) +
                     " outside {0.." + std::to_string(n) + "-1}");
  std::uint64_t result = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    result += binomial(sorted[i], i + 1);
  return result;
}

Subset unrank(std::uint64_t rank, std::size_t n, std::size_t r) {
  check_ground_set(n, r);
  if (rank >= binomial(n, r))
    throw OutOfRange("rank " + std::to_string(rank) + " >= C(" +
                     std::to_string(n) + "," + std::to_string(r) + ")");
  Subset out(r);
  std::size_t c = n;
  for (std::size_t i = r; i-- > 0;) {
    // Largest c with C(c, i+1) <= rank.
    do {
      --c;
    } while (binomial(c, i + 1) > rank);
    out[i] = c;
    rank -= binomial(c, i + 1);
  }
  return out;
}

bool next_colex(Subset &subset, std::size_t n) {
  const std::size_t r = subset.size();
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t limit = i + 1 < r ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j)
        subset[j] = j;
      return true;
    }
  }
  return false;
}

Graph::Graph(std::size_t n,
             std::vector<std::pair<std::size_t, std::size_t>> edge_list)
    : n(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edge_list) {
    if (u >= n)
      throw IndexOutOfRange(u, n);
    if (v >= n)
      throw IndexOutOfRange(v, n);
    if (u == v)
      throw ParseError("loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      throw ParseError("duplicate edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "}");
    edges.push_back(e);
  }
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &list : adj)
    std::sort(list.begin(), list.end());
  return adj;
}

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t r)
    : n_(n), r_(r) {
  check_ground_set(n, r);
  bits_.resize(binomial(n, r));
}

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t r, Bits bits)
    : n_(n), r_(r), bits_(std::move(bits)) {
  check_ground_set(n, r);
  if (bits_.size() != binomial(n, r))
    throw OutOfRange("bitset size does not match C(n,r)");
}

UniformHypergraph UniformHypergraph::complete(std::size_t n, std::size_t r) {
  UniformHypergraph h(n, r);
  h.bits_.set();
  return h;
}

UniformHypergraph
UniformHypergraph::from_edges(std::size_t n, std::size_t r,
                              const std::vector<Subset> &edges) {
  UniformHypergraph h(n, r);
  for (const auto &e : edges)
    h.insert(e);
  return h;
}

bool UniformHypergraph::contains(std::span<const std::size_t> edge) const {
  if (edge.size() != r_)
    throw OutOfRange("edge of size " + std::to_string(edge.size()) +
                     " in a " + std::to_string(r_) + "-uniform hypergraph");
  return bits_.test(rank(edge, n_));
}

void UniformHypergraph::insert(std::span<const std::size_t> edge) {
  if (edge.size() != r_)
    throw OutOfRange("edge of size " + std::to_string(edge.size()) +
                     " in a " + std::to_string(r_) + "-uniform hypergraph");
  bits_.set(rank(edge, n_));
}

std::vector<std::uint64_t> UniformHypergraph::edge_ranks() const {
  std::vector<std::uint64_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

std::vector<Subset> UniformHypergraph::edges() const {
  std::vector<Subset> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
    out.push_back(unrank(i, n_, r_));
  return out;
}

bool UniformHypergraph::is_subset_of(const UniformHypergraph &other) const {
  return n_ == other.n_ && r_ == other.r_ && bits_.is_subset_of(other.bits_);
}

UniformHypergraph UniformHypergraph::delete_vertex(std::size_t v) const {
  if (v >= n_)
    throw IndexOutOfRange(v, n_);
  UniformHypergraph out(n_ - 1, r_);
  for (auto e : edges()) {
    if (std::find(e.begin(), e.end(), v) != e.end())
      continue;
    for (auto &x : e)
      if (x > v)
        --x;
    out.insert(e);
  }
  return out;
}

UniformHypergraph
UniformHypergraph::relabel(std::span<const std::size_t> perm) const {
  if (perm.size() != n_)
    throw SizeMismatch(perm.size(), n_);
  std::vector<bool> hit(n_, false);
  for (auto p : perm) {
    if (p >= n_ || hit[p])
      throw NotAPermutation("relabelling is not a permutation");
    hit[p] = true;
  }
  UniformHypergraph out(n_, r_);
  for (auto e : edges()) {
    for (auto &x : e)
      x = perm[x];
    out.insert(e);
  }
  return out;
}

UniformHypergraph complement(const UniformHypergraph &h) {
  return UniformHypergraph(h.n(), h.r(), ~h.bits());
}

UniformHypergraph star_construction(std::size_t n) {
  if (n < 5)
    throw TooFewVertices(n, 5);
  UniformHypergraph h(n, 3);
  Subset t{0, 1, 2};
  do {
    if (t[0] < 3)
      h.insert(t);
  } while (next_colex(t, n));
  return h;
}

Graph theta_graph(std::size_t n) {
  if (n < 5)
    throw TooFewVertices(n, 5);
  std::vector<std::pair<std::size_t, std::size_t>> edges{
      {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (std::size_t i = 3; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

} // namespace metricsat
