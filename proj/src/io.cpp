#include "metricsat/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "metricsat/errors.hpp"

namespace metricsat::io {
namespace {

const json &field(const json &j, const char *key) {
  if (!j.is_object())
    throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_count(const json &j, const char *what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Subset as_subset(const json &j, std::size_t size, std::size_t n,
                 const char *what) {
  if (!j.is_array() || j.size() != size)
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(size) + " vertices");
  Subset s;
  for (const auto &v : j) {
    auto x = as_count(v, what);
    if (x >= n)
      throw ParseError(std::string(what) + " vertex " + std::to_string(x) +
                       " out of range");
    s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ParseError(std::string(what) + " repeats a vertex");
  return s;
}

Rational as_rational(const json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  throw ParseError("matrix entries must be integers or \"p/q\" strings");
}

json subset_json(const Subset &s) { return json(s); }

void read_edges(const json &list, UniformHypergraph &h, const char *what) {
  if (!list.is_array())
    throw ParseError(std::string(what) + " must be an array");
  for (const auto &e : list) {
    auto s = as_subset(e, h.r(), h.n(), "edge");
    auto rk = rank(s, h.n());
    if (h.contains(rk))
      throw ParseError(std::string("duplicate edge in ") + what);
    h.insert(rk);
  }
}

json edges_json(const UniformHypergraph &h) {
  json out = json::array();
  for (const auto &e : h.edges())
    out.push_back(subset_json(e));
  return out;
}

} // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

DistanceMatrix matrix_from_json(const json &j, bool validate) {
  const std::size_t n = as_count(field(j, "n"), "n");
  const json &rows = field(j, "dist");
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("dist must have n rows");
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("dist row " + std::to_string(i) + " must have n entries");
    for (std::size_t k = 0; k < n; ++k)
      d(i, k) = as_rational(rows[i][k]);
  }
  if (validate)
    validate_metric(d);
  return d;
}

json to_json(const DistanceMatrix &d) {
  json rows = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < d.size(); ++k)
      row.push_back(to_string(d(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", d.size()}, {"dist", std::move(rows)}};
}

DistanceMatrix matrix_from_csv(std::string_view text, bool validate) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      line.erase(std::remove_if(line.begin(), line.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 line.end());
      if (!line.empty())
        return true;
    }
    return false;
  };
  if (!next_line())
    throw ParseError("empty CSV matrix");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(line, &used);
    if (used != line.size())
      throw ParseError("bad header");
  } catch (const std::exception &) {
    throw ParseError("CSV header must be the point count, got '" + line + "'");
  }
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line())
      throw ParseError("CSV matrix has fewer than n rows");
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ','))
      cells.push_back(cell);
    if (cells.size() != n)
      throw ParseError("CSV row " + std::to_string(i) + " must have n entries");
    for (std::size_t k = 0; k < n; ++k)
      d(i, k) = parse_rational(cells[k]);
  }
  if (next_line())
    throw ParseError("CSV matrix has more than n rows");
  if (validate)
    validate_metric(d);
  return d;
}

std::string to_csv(const DistanceMatrix &d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t k = 0; k < d.size(); ++k)
      out += (k ? "," : "") + to_string(d(i, k));
    out += "\n";
  }
  return out;
}

Graph graph_from_json(const json &j) {
  const std::size_t n = as_count(field(j, "n"), "n");
  const json &list = field(j, "edges");
  if (!list.is_array())
    throw ParseError("edges must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto &e : list) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("graph edges are pairs");
    edges.emplace_back(as_count(e[0], "edge"), as_count(e[1], "edge"));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const IndexOutOfRange &e) {
    throw ParseError(e.what());
  }
}

json to_json(const Graph &g) {
  json edges = json::array();
  for (auto [u, v] : g.edges)
    edges.push_back({u, v});
  return {{"n", g.n}, {"edges", std::move(edges)}};
}

UniformHypergraph hypergraph_from_json(const json &j) {
  const std::size_t n = as_count(field(j, "n"), "n");
  const std::size_t r = as_count(field(j, "r"), "r");
  if (r > n || n > kMaxVertices)
    throw ParseError("need r <= n <= " + std::to_string(kMaxVertices));
  UniformHypergraph h(n, r);
  read_edges(field(j, "edges"), h, "edges");
  return h;
}

json to_json(const UniformHypergraph &h) {
  return {{"n", h.n()}, {"r", h.r()}, {"edges", edges_json(h)}};
}

ClosureCertificate certificate_from_json(const json &j) {
  const std::size_t n = as_count(field(j, "n"), "n");
  const std::size_t r = as_count(field(j, "r"), "r");
  const std::size_t k = as_count(field(j, "k"), "k");
  if (r > n || n > kMaxVertices)
    throw ParseError("need r <= n <= " + std::to_string(kMaxVertices));
  if (k < r || k > n)
    throw ParseError("need r <= k <= n");
  UniformHypergraph base(n, r);
  read_edges(field(j, "base"), base, "base");
  ClosureCertificate cert{std::move(base), k, {}};
  const json &steps = field(j, "steps");
  if (!steps.is_array())
    throw ParseError("steps must be an array");
  for (const auto &s : steps)
    cert.steps.push_back({as_subset(field(s, "T"), r, n, "T"),
                          as_subset(field(s, "S"), k, n, "S")});
  return cert;
}

json to_json(const ClosureCertificate &c) {
  json steps = json::array();
  for (const auto &s : c.steps)
    steps.push_back({{"T", subset_json(s.added)}, {"S", subset_json(s.witness)}});
  return {{"n", c.base.n()},
          {"r", c.base.r()},
          {"k", c.k},
          {"base", edges_json(c.base)},
          {"steps", std::move(steps)}};
}

LinearOrder order_from_json(const json &j) {
  const json &list = field(j, "order");
  if (!list.is_array())
    throw ParseError("order must be an array");
  LinearOrder o;
  for (const auto &v : list)
    o.order.push_back(as_count(v, "order entry"));
  return o;
}

json to_json(const LinearOrder &o) { return {{"order", o.order}}; }

json to_json(const RealizabilityVerdict &v) {
  return {{"status", v.status == MetricStatus::Metric ? "metric" : "non-metric"},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"explored", v.explored}};
}

} // namespace metricsat::io
