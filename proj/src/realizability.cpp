#include "metricsat/realizability.hpp"

#include <algorithm>
#include <array>

#include "metricsat/errors.hpp"
#include "metricsat/simplex.hpp"

namespace metricsat {
namespace {

std::uint64_t triple_rank(std::size_t a, std::size_t b, std::size_t c) {
  std::array<std::size_t, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return binomial(t[0], 1) + binomial(t[1], 2) + binomial(t[2], 3);
}

// Position of s within the sorted triple {r, s, t}.
std::size_t middle_position(std::size_t r, std::size_t s, std::size_t t) {
  return static_cast<std::size_t>(r < s) + static_cast<std::size_t>(t < s);
}

Subset sorted_triple(std::span<const std::size_t> triple) {
  if (triple.size() != 3)
    throw OutOfRange("expected a 3-subset");
  Subset t(triple.begin(), triple.end());
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw OutOfRange("triangle vertices must be distinct");
  return t;
}

} // namespace

MiddleAssignment::MiddleAssignment(std::size_t n)
    : n_(n), slots_(binomial(n, 3) * 3, Between::Open) {}

std::size_t MiddleAssignment::index(std::size_t r, std::size_t s,
                                    std::size_t t) const {
  for (auto p : {r, s, t})
    if (p >= n_)
      throw IndexOutOfRange(p, n_);
  if (r == s || s == t || r == t)
    throw OutOfRange("betweenness needs three distinct points");
  return triple_rank(r, s, t) * 3 + middle_position(r, s, t);
}

Between MiddleAssignment::state(std::size_t r, std::size_t s,
                                std::size_t t) const {
  return slots_[index(r, s, t)];
}

bool MiddleAssignment::force(std::size_t r, std::size_t s, std::size_t t,
                             bool value) {
  auto &slot = slots_[index(r, s, t)];
  const Between want = value ? Between::Yes : Between::No;
  if (slot == Between::Open) {
    slot = want;
    return true;
  }
  return slot == want;
}

void MiddleAssignment::choose_middle(std::span<const std::size_t> triple,
                                     std::size_t middle) {
  auto t = sorted_triple(triple);
  auto pos = std::find(t.begin(), t.end(), middle);
  if (pos == t.end())
    throw OutOfRange("middle " + std::to_string(middle) +
                     " is not a vertex of the triangle");
  t.erase(pos);
  if (!force(t[0], middle, t[1], true))
    throw InconsistentAssignment("middle " + std::to_string(middle) +
                                 " was already ruled out");
}

std::optional<std::size_t>
MiddleAssignment::middle(std::span<const std::size_t> triple) const {
  auto t = sorted_triple(triple);
  const auto base = rank(t, n_) * 3;
  for (std::size_t p = 0; p < 3; ++p)
    if (slots_[base + p] == Between::Yes)
      return t[p];
  return std::nullopt;
}

Propagation propagate(MiddleAssignment &a, const UniformHypergraph &h) {
  const std::size_t n = h.n();
  if (a.n() != n)
    throw SizeMismatch(a.n(), n);
  if (h.r() != 3)
    throw OutOfRange("realizability is defined for 3-uniform hypergraphs");

  bool changed = true;
  auto set = [&](std::size_t r, std::size_t s, std::size_t t, bool v) {
    if (a.state(r, s, t) == Between::Open)
      changed = true;
    return a.force(r, s, t, v);
  };

  const auto triples = binomial(n, 3);
  while (changed) {
    changed = false;

    for (std::uint64_t tr = 0; tr < triples; ++tr) {
      const Subset t = unrank(tr, n, 3);
      int yes = 0, no = 0;
      for (std::size_t p = 0; p < 3; ++p) {
        yes += a.slot(tr, p) == Between::Yes;
        no += a.slot(tr, p) == Between::No;
      }
      if (!h.contains(tr)) {
        if (yes > 0)
          return Propagation::Contradiction;
        for (std::size_t p = 0; p < 3; ++p)
          if (a.slot(tr, p) == Between::Open)
            set(t[(p + 1) % 3], t[p], t[(p + 2) % 3], false);
        continue;
      }
      if (yes > 1 || no == 3)
        return Propagation::Contradiction;
      for (std::size_t p = 0; p < 3; ++p) {
        if (a.slot(tr, p) != Between::Open)
          continue;
        if (yes == 1)
          set(t[(p + 1) % 3], t[p], t[(p + 2) % 3], false);
        else if (no == 2)
          set(t[(p + 1) % 3], t[p], t[(p + 2) % 3], true);
      }
    }

    // Menger: [abc] & [acd] => [abd] & [bcd], plus contrapositives.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x)
          continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (z == x || z == y)
            continue;
          const Between xyz = a.state(x, y, z);
          for (std::size_t w = 0; w < n; ++w) {
            if (w == x || w == y || w == z)
              continue;
            const Between xzw = a.state(x, z, w);
            if (xyz == Between::Open && xzw == Between::Open)
              continue;
            const Between xyw = a.state(x, y, w);
            const Between yzw = a.state(y, z, w);
            const bool tail_broken = xyw == Between::No || yzw == Between::No;
            bool ok = true;
            if (xyz == Between::Yes && xzw == Between::Yes)
              ok = set(x, y, w, true) && set(y, z, w, true);
            else if (xyz == Between::Yes && tail_broken)
              ok = set(x, z, w, false);
            else if (xzw == Between::Yes && tail_broken)
              ok = set(x, y, z, false);
            if (!ok)
              return Propagation::Contradiction;
          }
        }
      }
  }
  return Propagation::Consistent;
}

namespace {

std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i > j)
    std::swap(i, j);
  return binomial(j, 2) + i;
}

DistanceMatrix scale_to_integers(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  Integer lcm_den = 1, gcd_num = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d(i, j)));
      gcd_num = boost::multiprecision::gcd(gcd_num, numerator(d(i, j)));
    }
  if (gcd_num == 0)
    return d;
  DistanceMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_symmetric(i, j, d(i, j) * Rational(lcm_den, gcd_num));
  return out;
}

} // namespace

std::optional<DistanceMatrix> lp_max_slack(const MiddleAssignment &a,
                                           const UniformHypergraph &h) {
  const std::size_t n = h.n();
  if (a.n() != n)
    throw SizeMismatch(a.n(), n);
  MiddleAssignment closed = a;
  for (const auto &e : h.edges())
    if (!a.middle(e))
      throw InconsistentAssignment("assignment is not total: no middle for {" +
                                   std::to_string(e[0]) + "," +
                                   std::to_string(e[1]) + "," +
                                   std::to_string(e[2]) + "}");
  if (propagate(closed, h) == Propagation::Contradiction)
    throw InconsistentAssignment("assignment contradicts the Menger rule or "
                                 "the hypergraph's non-edges");

  const std::size_t pairs = binomial(n, 2);
  const std::size_t eps = pairs;
  lp::LinearProgram program;
  program.num_vars = pairs + 1;
  program.objective.assign(pairs + 1, Rational(0));
  program.objective[eps] = 1;

  using Terms = std::vector<std::pair<std::size_t, Rational>>;
  Subset t{0, 1, 2};
  std::uint64_t tr = 0;
  do {
    if (h.contains(tr)) {
      const std::size_t m = *closed.middle(t);
      Subset ends;
      for (auto v : t)
        if (v != m)
          ends.push_back(v);
      program.add(Terms{{pair_index(ends[0], m), 1},
                        {pair_index(m, ends[1]), 1},
                        {pair_index(ends[0], ends[1]), -1}},
                  lp::Relation::Equal, 0);
    } else {
      for (std::size_t p = 0; p < 3; ++p) {
        const std::size_t s = t[p], r = t[(p + 1) % 3], u = t[(p + 2) % 3];
        program.add(Terms{{pair_index(r, s), 1},
                          {pair_index(s, u), 1},
                          {pair_index(r, u), -1},
                          {eps, -1}},
                    lp::Relation::GreaterEqual, 0);
      }
    }
    ++tr;
  } while (next_colex(t, n));

  Terms total;
  for (std::size_t p = 0; p < pairs; ++p) {
    program.add(Terms{{p, 1}, {eps, -1}}, lp::Relation::GreaterEqual, 0);
    total.emplace_back(p, 1);
  }
  program.add(std::move(total), lp::Relation::Equal, 1);

  const auto solution = lp::solve(program);
  if (solution.status != lp::Status::Optimal || solution.value <= 0)
    return std::nullopt;

  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d.set_symmetric(i, j, solution.x[pair_index(i, j)]);
  d = scale_to_integers(d);
  validate_metric(d);
  if (degenerate_hypergraph(d) != h)
    throw InternalConsistencyError(
        "LP witness does not reproduce the hypergraph");
  return d;
}

namespace {

class AssignmentSearch {
public:
  explicit AssignmentSearch(const UniformHypergraph &h)
      : h_(h), edges_(h.edges()) {}

  RealizabilityVerdict run() {
    RealizabilityVerdict verdict;
    if (dfs(MiddleAssignment(h_.n()))) {
      verdict.status = MetricStatus::Metric;
      verdict.witness = std::move(witness_);
    }
    verdict.explored = explored_;
    return verdict;
  }

private:
  bool dfs(MiddleAssignment a) {
    ++explored_;
    if (propagate(a, h_) == Propagation::Contradiction)
      return false;
    const auto next = pick_edge(a);
    if (!next) {
      witness_ = lp_max_slack(a, h_);
      return witness_.has_value();
    }
    const Subset &e = edges_[*next];
    for (auto m : e) {
      const std::size_t r = e[0] == m ? e[1] : e[0];
      const std::size_t t = e[2] == m ? e[1] : e[2];
      if (a.state(r, m, t) == Between::No)
        continue;
      MiddleAssignment child = a;
      child.choose_middle(e, m);
      if (dfs(std::move(child)))
        return true;
    }
    return false;
  }

  // Undecided edge with the most decided neighbours (edges sharing two
  // vertices), then fewest remaining options, then lowest colex rank.
  std::optional<std::size_t> pick_edge(const MiddleAssignment &a) const {
    std::optional<std::size_t> best;
    int best_score = -1, best_open = 4;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (a.middle(edges_[i]))
        continue;
      int score = 0;
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (j == i || !a.middle(edges_[j]))
          continue;
        std::size_t shared = 0;
        for (auto v : edges_[i])
          shared += std::count(edges_[j].begin(), edges_[j].end(), v);
        score += shared == 2;
      }
      const auto tr = rank(edges_[i], h_.n());
      int open = 0;
      for (std::size_t p = 0; p < 3; ++p)
        open += a.slot(tr, p) == Between::Open;
      if (score > best_score || (score == best_score && open < best_open)) {
        best = i;
        best_score = score;
        best_open = open;
      }
    }
    return best;
  }

  const UniformHypergraph &h_;
  std::vector<Subset> edges_;
  std::uint64_t explored_ = 0;
  std::optional<DistanceMatrix> witness_;
};

} // namespace

RealizabilityVerdict is_metric_hypergraph(const UniformHypergraph &h,
                                          const RealizabilityOptions &options) {
  if (h.r() != 3)
    throw OutOfRange("realizability is defined for 3-uniform hypergraphs");
  if (h.n() > options.ceiling)
    throw CeilingExceeded(h.n(), options.ceiling);
  return AssignmentSearch(h).run();
}

AuditReport minimal_nonmetric_audit() {
  auto root = UniformHypergraph::complete(6, 3);
  root.erase(rank(Subset{3, 4, 5}, 6));

  AuditReport report;
  report.entries.push_back(
      {"root: 6 vertices, 19 edges", std::nullopt, root, is_metric_hypergraph(root)});
  bool ok = report.entries.back().verdict.status == MetricStatus::NonMetric;
  for (std::size_t v = 0; v < 6; ++v) {
    auto sub = root.delete_vertex(v);
    std::string label = "delete vertex " + std::to_string(v) + ": " +
                        std::to_string(sub.edge_count()) + " edges";
    auto verdict = is_metric_hypergraph(sub);
    ok = ok && verdict.status == MetricStatus::Metric;
    report.entries.push_back({std::move(label), v, std::move(sub),
                              std::move(verdict)});
  }
  report.confirmed = ok;
  return report;
}

} // namespace metricsat
