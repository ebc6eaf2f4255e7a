#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "metricsat/errors.hpp"
#include "metricsat/realizability.hpp"
#include "metricsat/simplex.hpp"
#include "oracles.hpp"

using namespace metricsat;

namespace {

MiddleAssignment assignment_from_metric(const DistanceMatrix &d,
                                        const UniformHypergraph &h) {
  MiddleAssignment a(d.size());
  for (const auto &e : h.edges())
    a.choose_middle(e, *middle_of(d, e));
  return a;
}

UniformHypergraph nineteen_edges() {
  auto h = UniformHypergraph::complete(6, 3);
  h.erase(rank(Subset{3, 4, 5}, 6));
  return h;
}

/// Independent feasibility test for one choice of middles: builds its own
/// LP (no propagation) and asks for positive slack.
bool oracle_realizable(const std::map<Subset, std::size_t> &middles,
                       const UniformHypergraph &h) {
  const std::size_t n = h.n();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      var[{i, j}] = var.size();
  auto v = [&](std::size_t i, std::size_t j) {
    return var.at({std::min(i, j), std::max(i, j)});
  };
  const std::size_t eps = var.size();
  lp::LinearProgram p;
  p.num_vars = eps + 1;
  p.objective.assign(eps + 1, Rational(0));
  p.objective[eps] = 1;
  for (const auto &t : oracle::subsets(n, 3)) {
    auto it = middles.find(t);
    if (it != middles.end()) {
      Subset ends;
      for (auto x : t)
        if (x != it->second)
          ends.push_back(x);
      p.add({{v(ends[0], it->second), 1}, {v(it->second, ends[1]), 1},
             {v(ends[0], ends[1]), -1}},
            lp::Relation::Equal, 0);
    } else {
      for (auto s : t) {
        Subset ends;
        for (auto x : t)
          if (x != s)
            ends.push_back(x);
        p.add({{v(ends[0], s), 1}, {v(s, ends[1]), 1},
               {v(ends[0], ends[1]), -1}, {eps, -1}},
              lp::Relation::GreaterEqual, 0);
      }
    }
  }
  std::vector<std::pair<std::size_t, Rational>> sum;
  for (std::size_t k = 0; k < eps; ++k) {
    p.add({{k, 1}, {eps, -1}}, lp::Relation::GreaterEqual, 0);
    sum.emplace_back(k, 1);
  }
  p.add(sum, lp::Relation::Equal, 1);
  auto s = lp::solve(p);
  return s.status == lp::Status::Optimal && s.value > 0;
}

} // namespace

TEST_CASE("MiddleAssignment bookkeeping") {
  MiddleAssignment a(5);
  CHECK(a.state(0, 1, 2) == Between::Open);
  a.choose_middle(Subset{2, 0, 1}, 1);
  CHECK(a.state(0, 1, 2) == Between::Yes);
  CHECK(a.state(2, 1, 0) == Between::Yes);
  CHECK(a.middle(Subset{0, 1, 2}) == 1u);
  CHECK(a.force(0, 2, 1, false));
  CHECK_FALSE(a.force(0, 2, 1, true));
  CHECK_THROWS_AS(a.choose_middle(Subset{0, 1, 2}, 4), OutOfRange);
  CHECK_THROWS_AS(a.choose_middle(Subset{0, 1, 2}, 2), InconsistentAssignment);
  CHECK_THROWS_AS(a.state(0, 0, 1), OutOfRange);
  CHECK_THROWS_AS(a.state(0, 1, 7), IndexOutOfRange);
}

TEST_CASE("propagate") {
  SUBCASE("collinear assignment on the complete hypergraph is consistent") {
    std::vector<Rational> xs{0, 1, 2, 3, 4};
    auto d = line_metric(xs);
    auto h = UniformHypergraph::complete(5, 3);
    auto a = assignment_from_metric(d, h);
    CHECK(propagate(a, h) == Propagation::Consistent);
  }
  SUBCASE("Menger forces a non-edge to be degenerate") {
    auto h = UniformHypergraph::complete(4, 3);
    h.erase(rank(Subset{0, 1, 3}, 4));
    MiddleAssignment a(4);
    a.choose_middle(Subset{0, 1, 2}, 1); // [a b c]
    a.choose_middle(Subset{0, 2, 3}, 2); // [a c d]
    CHECK(propagate(a, h) == Propagation::Contradiction);
  }
  SUBCASE("empty hypergraph") {
    MiddleAssignment a(3);
    CHECK(propagate(a, UniformHypergraph(3, 3)) == Propagation::Consistent);
    CHECK(a.state(0, 1, 2) == Between::No);
  }
  SUBCASE("Menger completes a chain") {
    auto h = UniformHypergraph::complete(4, 3);
    MiddleAssignment a(4);
    a.choose_middle(Subset{0, 1, 2}, 1);
    a.choose_middle(Subset{0, 2, 3}, 2);
    REQUIRE(propagate(a, h) == Propagation::Consistent);
    CHECK(a.middle(Subset{0, 1, 3}) == 1u);
    CHECK(a.middle(Subset{1, 2, 3}) == 2u);
  }
  SUBCASE("an edge whose three middles are ruled out") {
    auto h = UniformHypergraph::from_edges(3, 3, {{0, 1, 2}});
    MiddleAssignment a(3);
    a.force(1, 0, 2, false);
    a.force(0, 1, 2, false);
    a.force(0, 2, 1, false);
    CHECK(propagate(a, h) == Propagation::Contradiction);
  }
  SUBCASE("two middles on one edge") {
    auto h = UniformHypergraph::from_edges(3, 3, {{0, 1, 2}});
    MiddleAssignment a(3);
    a.force(1, 0, 2, true);
    a.force(0, 1, 2, true);
    CHECK(propagate(a, h) == Propagation::Contradiction);
  }
  SUBCASE("size mismatch") {
    MiddleAssignment a(4);
    CHECK_THROWS_AS(propagate(a, UniformHypergraph(5, 3)), SizeMismatch);
  }
}

TEST_CASE("lp_max_slack") {
  SUBCASE("collinear assignment yields a line witness") {
    std::vector<Rational> xs{0, 1, 2, 3, 4};
    auto h = UniformHypergraph::complete(5, 3);
    auto w = lp_max_slack(assignment_from_metric(line_metric(xs), h), h);
    REQUIRE(w.has_value());
    CHECK_NOTHROW(validate_metric(*w));
    CHECK(degenerate_hypergraph(*w).edge_count() == 10);
  }
  SUBCASE("theta metric on five points") {
    auto d = graph_metric(theta_graph(5));
    auto h = degenerate_hypergraph(d);
    REQUIRE(h.edge_count() == 9);
    auto w = lp_max_slack(assignment_from_metric(d, h), h);
    REQUIRE(w.has_value());
    CHECK(degenerate_hypergraph(*w) == h);
  }
  SUBCASE("no total assignment of the 19-edge hypergraph is realisable") {
    auto h = nineteen_edges();
    std::mt19937_64 rng(19);
    const auto edges = h.edges();
    int refuted = 0, infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
      MiddleAssignment a(6);
      for (const auto &e : edges)
        a.choose_middle(e, e[rng() % 3]);
      std::optional<DistanceMatrix> witness;
      try {
        witness = lp_max_slack(a, h);
        ++infeasible;
      } catch (const InconsistentAssignment &) {
        ++refuted;
      }
      CHECK_FALSE(witness.has_value());
    }
    CHECK(refuted + infeasible == 200);
  }
  SUBCASE("partial assignment is rejected") {
    auto h = UniformHypergraph::complete(4, 3);
    CHECK_THROWS_AS(lp_max_slack(MiddleAssignment(4), h),
                    InconsistentAssignment);
  }
}

TEST_CASE("is_metric_hypergraph on the named instances") {
  auto complete = is_metric_hypergraph(UniformHypergraph::complete(5, 3));
  CHECK(complete.status == MetricStatus::Metric);
  REQUIRE(complete.witness.has_value());
  CHECK(degenerate_hypergraph(*complete.witness).is_complete());

  auto all = UniformHypergraph::complete(6, 3);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto h = all;
    h.erase(t);
    auto v = is_metric_hypergraph(h);
    CHECK(v.status == MetricStatus::NonMetric);
    CHECK_FALSE(v.witness.has_value());
  }

  auto empty = is_metric_hypergraph(UniformHypergraph(3, 3));
  CHECK(empty.status == MetricStatus::Metric);
  REQUIRE(empty.witness.has_value());
  CHECK(degenerate_hypergraph(*empty.witness).empty());

  CHECK_THROWS_AS(is_metric_hypergraph(UniformHypergraph(7, 3)),
                  CeilingExceeded);
  CHECK_NOTHROW(is_metric_hypergraph(UniformHypergraph(7, 3), {.ceiling = 7}));
}

TEST_CASE("degenerate sets of real metrics are recognised as metric") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 4;
    auto d = random_rational_metric(n, seed);
    auto h = degenerate_hypergraph(d);
    auto v = is_metric_hypergraph(h);
    REQUIRE(v.status == MetricStatus::Metric);
    REQUIRE(v.witness.has_value());
    CHECK_NOTHROW(validate_metric(*v.witness));
    CHECK(degenerate_hypergraph(*v.witness) == h);
  }
}

TEST_CASE("verdicts are deterministic and invariant under relabelling") {
  auto h = degenerate_hypergraph(graph_metric(theta_graph(6)));
  auto first = is_metric_hypergraph(h);
  auto second = is_metric_hypergraph(h);
  CHECK(first.status == MetricStatus::Metric);
  CHECK(first.explored == second.explored);
  CHECK(first.witness == second.witness);

  std::mt19937_64 rng(23);
  std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_metric_hypergraph(nineteen_edges().relabel(perm)).status ==
          MetricStatus::NonMetric);
    CHECK(is_metric_hypergraph(h.relabel(perm)).status == MetricStatus::Metric);
  }
}

TEST_CASE("propagation never refutes a realisable completion") {
  // Five points: whenever propagation reports a contradiction for a partial
  // assignment, no completion of it passes the independent LP.
  std::mt19937_64 rng(31);
  int contradictions = 0;
  for (std::uint64_t seed = 1; seed <= 400 && contradictions < 12; ++seed) {
    auto d = random_rational_metric(5, seed);
    auto h = degenerate_hypergraph(d);
    const auto edges = h.edges();
    if (edges.size() < 2 || edges.size() > 7)
      continue;
    MiddleAssignment a(5);
    std::map<Subset, std::size_t> fixed;
    const std::size_t decided = std::min<std::size_t>(edges.size() - 1, 2);
    for (std::size_t i = 0; i < decided; ++i) {
      auto m = edges[i][rng() % 3];
      a.choose_middle(edges[i], m);
      fixed[edges[i]] = m;
    }
    auto probe = a;
    if (propagate(probe, h) == Propagation::Consistent)
      continue;
    ++contradictions;

    std::vector<Subset> open(edges.begin() + static_cast<std::ptrdiff_t>(decided),
                             edges.end());
    std::size_t combos = 1;
    for (std::size_t i = 0; i < open.size(); ++i)
      combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      auto middles = fixed;
      std::size_t c = code;
      for (const auto &e : open) {
        middles[e] = e[c % 3];
        c /= 3;
      }
      CHECK_FALSE(oracle_realizable(middles, h));
    }
  }
  CHECK(contradictions > 0);
}

TEST_CASE("minimal_nonmetric_audit") {
  auto report = minimal_nonmetric_audit();
  REQUIRE(report.entries.size() == 7);
  CHECK(report.confirmed);
  CHECK(report.entries[0].hypergraph.edge_count() == 19);
  CHECK(report.entries[0].verdict.status == MetricStatus::NonMetric);
  for (std::size_t i = 1; i < 7; ++i) {
    const auto &e = report.entries[i];
    REQUIRE(e.deleted_vertex.has_value());
    // The missing triple is {3,4,5}: deleting one of its vertices leaves
    // every triple, deleting any other vertex keeps the gap.
    const std::size_t expected = *e.deleted_vertex >= 3 ? 10 : 9;
    CHECK(e.hypergraph.edge_count() == expected);
    CHECK(e.verdict.status == MetricStatus::Metric);
    REQUIRE(e.verdict.witness.has_value());
    CHECK(degenerate_hypergraph(*e.verdict.witness) == e.hypergraph);
  }
}
