#pragma once

// Brute-force reference implementations used only by the tests. None of
// them share code paths with the library routines they check: sets are
// std::set of sorted vectors, distances are plain integers or rationals,
// and every search is exhaustive.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "metricsat/hypergraph.hpp"
#include "metricsat/metric.hpp"

namespace oracle {

using Set = std::vector<std::size_t>;
using Family = std::set<Set>;

/// All size-k subsets of {0..n-1}, in lexicographic order.
inline std::vector<Set> subsets(std::size_t n, std::size_t k) {
  std::vector<Set> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Set s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i])
        s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

inline std::vector<Set> subsets_of(const Set &ground, std::size_t k) {
  std::vector<Set> out;
  for (const auto &idx : subsets(ground.size(), k)) {
    Set s;
    for (auto i : idx)
      s.push_back(ground[i]);
    out.push_back(s);
  }
  return out;
}

inline Family family(const metricsat::UniformHypergraph &h) {
  Family f;
  for (const auto &e : h.edges())
    f.insert(e);
  return f;
}

/// Weak saturation closure by full rescans until nothing changes.
inline Family naive_closure(Family current, std::size_t n, std::size_t r,
                            std::size_t k) {
  const auto ksets = subsets(n, k);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto &s : ksets) {
      std::vector<Set> missing;
      for (const auto &t : subsets_of(s, r))
        if (!current.count(t))
          missing.push_back(t);
      if (missing.size() == 1) {
        current.insert(missing.front());
        changed = true;
      }
    }
  }
  return current;
}

inline std::size_t choose(std::size_t n, std::size_t k) {
  return subsets(n, k).size();
}

/// Unweighted all-pairs distances by breadth-first search; -1 = unreachable.
inline std::vector<std::vector<long>>
bfs_distances(std::size_t n,
              const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<long>> d(n, std::vector<long>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto v : adj[u])
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push_back(v);
        }
    }
  }
  return d;
}

/// Nondegenerate triangles of an integer distance table.
inline std::vector<Set>
nondegenerate_triples(const std::vector<std::vector<long>> &d) {
  std::vector<Set> out;
  for (const auto &t : subsets(d.size(), 3)) {
    const long a = d[t[0]][t[1]], b = d[t[1]][t[2]], c = d[t[0]][t[2]];
    if (a + b != c && a + c != b && b + c != a)
      out.push_back(t);
  }
  return out;
}

/// True iff some permutation of the points satisfies betweenness for every
/// position-ordered triple. Exhaustive over n! orders.
inline bool some_order_fits(const metricsat::DistanceMatrix &d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        for (std::size_t c = b + 1; c < n && ok; ++c)
          ok = d(p[a], p[b]) + d(p[b], p[c]) == d(p[a], p[c]);
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

} // namespace oracle
