#include "metricsat/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>

#include "metricsat/errors.hpp"

namespace metricsat {

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), d_(n * n) {}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Rational> row_major)
    : n_(n), d_(std::move(row_major)) {
  if (d_.size() != n * n)
    throw SizeMismatch(d_.size(), n * n);
}

void DistanceMatrix::set_symmetric(std::size_t i, std::size_t j,
                                   const Rational &value) {
  (*this)(i, j) = value;
  (*this)(j, i) = value;
}

void validate_metric(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0)
      throw NonzeroDiagonal(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) != d(j, i))
        throw AsymmetryError(i, j);
      if (d(i, j) <= 0)
        throw NonpositiveDistance(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k)
          continue;
        if (d(i, k) > d(i, j) + d(j, k))
          throw TriangleViolation(i, k, j);
      }
}

bool betweenness(const DistanceMatrix &d, std::size_t r, std::size_t s,
                 std::size_t t) {
  const std::size_t n = d.size();
  for (auto p : {r, s, t})
    if (p >= n)
      throw IndexOutOfRange(p, n);
  if (r == s || s == t || r == t)
    return false;
  return d(r, s) + d(s, t) == d(r, t);
}

std::optional<std::size_t> middle_of(const DistanceMatrix &d,
                                     std::span<const std::size_t> triple) {
  if (triple.size() != 3)
    throw OutOfRange("middle_of expects a 3-subset");
  const std::size_t n = d.size();
  for (auto p : triple)
    if (p >= n)
      throw IndexOutOfRange(p, n);
  const std::size_t a = triple[0], b = triple[1], c = triple[2];
  if (a == b || b == c || a == c)
    throw OutOfRange("middle_of expects three distinct points");

  std::optional<std::size_t> middle;
  auto consider = [&](std::size_t r, std::size_t s, std::size_t t) {
    if (d(r, s) + d(s, t) != d(r, t))
      return;
    if (middle)
      throw InternalConsistencyError(
          "triangle has two middles; the matrix is not a metric with "
          "positive distances");
    middle = s;
  };
  consider(b, a, c);
  consider(a, b, c);
  consider(a, c, b);
  return middle;
}

UniformHypergraph degenerate_hypergraph(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  if (n < 3)
    throw TooFewPoints(n, 3);
  UniformHypergraph h(n, 3);
  Subset t{0, 1, 2};
  std::uint64_t idx = 0;
  do {
    if (middle_of(d, t))
      h.insert(idx);
    ++idx;
  } while (next_colex(t, n));
  return h;
}

DistanceMatrix graph_metric(const Graph &g) {
  const std::size_t n = g.n;
  if (n == 0)
    throw TooFewPoints(0, 1);
  const auto adj = g.adjacency();
  DistanceMatrix d(n);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::size_t> dist(n, kUnseen);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u])
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kUnseen) {
        // Report the component containing vertex 0.
        std::vector<std::size_t> component;
        if (src == 0) {
          for (std::size_t w = 0; w < n; ++w)
            if (dist[w] != kUnseen)
              component.push_back(w);
        } else {
          component.push_back(0);
        }
        throw DisconnectedGraph(std::move(component));
      }
      d(src, v) = Rational(dist[v]);
    }
  }
  return d;
}

DistanceMatrix line_metric(std::span<const Rational> coords) {
  const std::size_t n = coords.size();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coords[i] == coords[j])
        throw DuplicateCoordinate(i, j);
      d.set_symmetric(i, j, abs_diff(coords[i], coords[j]));
    }
  return d;
}

DistanceMatrix four_cycle_metric() {
  DistanceMatrix d(4);
  for (std::size_t i = 0; i < 4; ++i) {
    d.set_symmetric(i, (i + 1) % 4, Rational(1));
  }
  d.set_symmetric(0, 2, Rational(2));
  d.set_symmetric(1, 3, Rational(2));
  return d;
}

DistanceMatrix random_rational_metric(std::size_t n, std::uint64_t seed) {
  if (n == 0)
    throw TooFewPoints(0, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(1, 12);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::bernoulli_distribution extra_edge(0.35);

  // Weighted connected graph: a random recursive tree plus extra chords.
  std::vector<std::optional<Rational>> w(n * n);
  auto weight = [&] { return Rational(numerator(rng), denominator(rng)); };
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    auto u = parent(rng);
    auto x = weight();
    w[u * n + v] = x;
    w[v * n + u] = x;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!w[u * n + v] && extra_edge(rng)) {
        auto x = weight();
        w[u * n + v] = x;
        w[v * n + u] = x;
      }
  for (std::size_t i = 0; i < n; ++i)
    w[i * n + i] = Rational(0);

  // Floyd-Warshall; positive weights keep off-diagonal distances positive.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i * n + k])
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!w[k * n + j])
          continue;
        Rational through = *w[i * n + k] + *w[k * n + j];
        auto &cur = w[i * n + j];
        if (!cur || through < *cur)
          cur = through;
      }
    }

  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = *w[i * n + j];
  return d;
}

std::vector<MengerViolation> check_menger(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  std::vector<char> between(n * n * n, 0);
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) {
    return (a * n + b) * n + c;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        between[at(a, b, c)] = betweenness(d, a, b, c);

  std::vector<MengerViolation> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!between[at(a, b, c)])
          continue;
        for (std::size_t e = 0; e < n; ++e) {
          if (!between[at(a, c, e)])
            continue;
          if (!between[at(a, b, e)] || !between[at(b, c, e)])
            out.push_back({a, b, c, e});
        }
      }
  return out;
}

} // namespace metricsat
