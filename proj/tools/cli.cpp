#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "metricsat/errors.hpp"
#include "metricsat/hypergraph.hpp"
#include "metricsat/io.hpp"
#include "metricsat/lines.hpp"
#include "metricsat/metric.hpp"
#include "metricsat/realizability.hpp"
#include "metricsat/saturation.hpp"

namespace metricsat::cli {
namespace {

using io::json;

const std::vector<std::string> kCommands = {
    "degenerate", "close",         "verify-cert", "saturated", "anchor",
    "reconstruct", "witness-check", "realize",     "gen",       "sweep"};

constexpr const char *kUsage = R"(usage: metricsat <command> [args] [options]

commands:
  degenerate [metric]              degenerate triangles as a hypergraph
  close [hypergraph]               closure plus replayable certificate
  verify-cert [certificate]        replay a certificate
  saturated [hypergraph]           weak K^r_k-saturation test
  anchor [hypergraph]              anchor certificate via closure (k=6)
  reconstruct [metric]             linear order fitting the metric
  witness-check <hypergraph> <metric>
                                   verify a non-anchor witness
  realize [hypergraph]             decide whether a hypergraph is metric
  gen star|theta|cycle4|line|random <params>
  sweep theorem2|theorem3|min-sat|menger|audit [params]

Inputs default to standard input ("-"). Exit status: 0 affirmative,
1 negative, 2 error.

options:
  -o, --output FILE   write output to FILE
  --seed N            seed for random generators (default 1)
  --budget N          enumeration cap (default 1000000)
  -k N, -r N          saturation parameters (default k=6, r=3)
  --ceiling N         largest n for realize (default 6)
  --jobs N            worker threads for enumerations
  --format json|csv   matrix format
  --no-validate       accept matrices that violate the metric axioms
  --slow              include min-sat n=7
  --graph             gen theta: emit the graph instead of its metric
)";

class Runner {
public:
  Runner(const RunConfig &config, std::istream &in, std::ostream &out,
         std::ostream &err)
      : cfg_(config), in_(in), out_(out), err_(err) {}

  int dispatch() {
    const auto &c = cfg_.command;
    if (c == "degenerate")
      return degenerate();
    if (c == "close")
      return close();
    if (c == "verify-cert")
      return verify_cert();
    if (c == "saturated")
      return saturated();
    if (c == "anchor")
      return anchor();
    if (c == "reconstruct")
      return reconstruct();
    if (c == "witness-check")
      return witness_check();
    if (c == "realize")
      return realize();
    if (c == "gen")
      return gen();
    if (c == "sweep")
      return sweep();
    throw ParseError("unknown command '" + c + "'");
  }

private:
  // Input handling ---------------------------------------------------------

  std::string arg(std::size_t i) const {
    return i < cfg_.args.size() ? cfg_.args[i] : std::string("-");
  }

  std::string read_text(const std::string &path) {
    if (path == "-") {
      if (stdin_used_)
        throw ParseError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), {}};
    }
    std::ifstream file(path);
    if (!file)
      throw ParseError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), {}};
  }

  /// Accepts the matrix format, the CSV matrix format (--format csv), or a
  /// graph file, which is turned into its shortest-path metric.
  DistanceMatrix read_metric(const std::string &path) {
    const auto text = read_text(path);
    if (cfg_.csv)
      return io::matrix_from_csv(text, !cfg_.no_validate);
    const auto j = io::parse(text);
    if (j.is_object() && j.contains("edges") && !j.contains("dist"))
      return graph_metric(io::graph_from_json(j));
    return io::matrix_from_json(j, !cfg_.no_validate);
  }

  UniformHypergraph read_hypergraph(const std::string &path) {
    return io::hypergraph_from_json(io::parse(read_text(path)));
  }

  std::size_t param(std::size_t i, const char *what) const {
    if (i >= cfg_.args.size())
      throw ParseError(std::string("missing parameter: ") + what);
    try {
      std::size_t used = 0;
      auto v = std::stoull(cfg_.args[i], &used);
      if (used != cfg_.args[i].size())
        throw std::invalid_argument(what);
      return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
      throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
  }

  EnumerationOptions enumeration() const { return {cfg_.budget, cfg_.jobs}; }

  // Output -----------------------------------------------------------------

  void emit_text(const std::string &text) {
    if (cfg_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.output);
    if (!file)
      throw ParseError("cannot write '" + cfg_.output + "'");
    file << text;
  }

  void emit(const json &j) { emit_text(j.dump() + "\n"); }

  void emit_matrix(const DistanceMatrix &d) {
    if (cfg_.csv)
      emit_text(io::to_csv(d));
    else
      emit(io::to_json(d));
  }

  static int verdict(bool affirmative) {
    return affirmative ? kAffirmative : kNegative;
  }

  // Commands ---------------------------------------------------------------

  int degenerate() {
    emit(io::to_json(degenerate_hypergraph(read_metric(arg(0)))));
    return kAffirmative;
  }

  int close() {
    auto h = read_hypergraph(arg(0));
    auto result = weak_saturation_closure(h, cfg_.k);
    auto j = io::to_json(result.certificate);
    j["closure"] = io::to_json(result.closure)["edges"];
    emit(j);
    return kAffirmative;
  }

  int verify_cert() {
    auto cert = io::certificate_from_json(io::parse(read_text(arg(0))));
    const bool ok = verify_certificate(cert);
    emit({{"valid", ok}, {"steps", cert.steps.size()}});
    return verdict(ok);
  }

  int saturated() {
    auto h = read_hypergraph(arg(0));
    const bool ok = is_weakly_saturated(h, cfg_.k);
    emit({{"saturated", ok}, {"k", cfg_.k}, {"edges", h.edge_count()}});
    return verdict(ok);
  }

  int anchor() {
    auto h = read_hypergraph(arg(0));
    const bool ok = anchor_via_closure(h);
    emit({{"anchor", ok ? "certified" : "inconclusive"}});
    return verdict(ok);
  }

  int reconstruct() {
    auto d = read_metric(arg(0));
    auto order = reconstruct_line(d);
    if (!order) {
      emit({{"order", nullptr}, {"reversed", false}});
      return kNegative;
    }
    // Report the orientation that starts with the smaller endpoint.
    bool reversed = false;
    if (order->order.size() > 1 && order->order.front() > order->order.back()) {
      *order = order->reversed();
      reversed = true;
    }
    auto j = io::to_json(*order);
    j["reversed"] = reversed;
    emit(j);
    return kAffirmative;
  }

  int witness_check() {
    if (cfg_.args.size() < 2)
      throw ParseError("witness-check needs <hypergraph> <metric>");
    auto h = read_hypergraph(arg(0));
    auto d = read_metric(arg(1));
    const bool ok = verify_non_anchor_witness(h, d);
    emit({{"non_anchor_witness", ok}});
    return verdict(ok);
  }

  int realize() {
    auto h = read_hypergraph(arg(0));
    if (cfg_.ceiling > 6)
      err_ << "warning: ceiling " << cfg_.ceiling
           << " above 6; the search is exponential in the edge count\n";
    auto v = is_metric_hypergraph(h, {cfg_.ceiling});
    emit(io::to_json(v));
    return verdict(v.status == MetricStatus::Metric);
  }

  int gen() {
    const std::string kind = cfg_.args.empty() ? "" : cfg_.args[0];
    if (kind == "star") {
      emit(io::to_json(star_construction(param(1, "n"))));
    } else if (kind == "theta") {
      auto g = theta_graph(param(1, "n"));
      if (cfg_.graph)
        emit(io::to_json(g));
      else
        emit_matrix(graph_metric(g));
    } else if (kind == "cycle4") {
      emit_matrix(four_cycle_metric());
    } else if (kind == "line") {
      std::vector<Rational> coords;
      for (std::size_t i = 1; i < cfg_.args.size(); ++i)
        coords.push_back(parse_rational(cfg_.args[i]));
      emit_matrix(line_metric(coords));
    } else if (kind == "random") {
      emit_matrix(random_rational_metric(param(1, "n"), cfg_.seed));
    } else {
      throw ParseError("gen expects star|theta|cycle4|line|random");
    }
    return kAffirmative;
  }

  int sweep() {
    const std::string kind = cfg_.args.empty() ? "" : cfg_.args[0];
    if (kind == "theorem2")
      return sweep_theorem2();
    if (kind == "theorem3")
      return sweep_theorem3();
    if (kind == "min-sat")
      return sweep_min_sat();
    if (kind == "menger")
      return sweep_menger();
    if (kind == "audit")
      return sweep_audit();
    throw ParseError("sweep expects theorem2|theorem3|min-sat|menger|audit");
  }

  std::vector<std::size_t> params_or(std::vector<std::size_t> fallback) const {
    if (cfg_.args.size() <= 1)
      return fallback;
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < cfg_.args.size(); ++i)
      out.push_back(param(i, "n"));
    return out;
  }

  // Every hypergraph with C(n,r)-n+k-1 edges saturates, and some hypergraph
  // one edge smaller does not; for r=3, k=6 the theta metric is checked as
  // an explicit non-anchor witness.
  int sweep_theorem2() {
    json rows = json::array();
    bool ok = true;
    for (auto n : params_or({6, 7})) {
      const auto total = binomial(n, cfg_.r);
      if (total + cfg_.k < n + 1)
        throw ParseError("bound is vacuous for n=" + std::to_string(n));
      const std::size_t bound = total - n + cfg_.k - 1;
      auto bad = exhaustive_size_check(n, cfg_.r, cfg_.k, bound, enumeration());
      json row = {{"n", n},
                  {"size", bound},
                  {"all_saturated", !bad.has_value()},
                  {"candidates", count_combinations(total, total - bound)}};
      ok = ok && !bad;
      if (bound > 0) {
        auto below =
            exhaustive_size_check(n, cfg_.r, cfg_.k, bound - 1, enumeration());
        row["below_counterexample"] =
            below ? io::to_json(*below)["edges"] : json(nullptr);
        ok = ok && below.has_value();
      }
      if (cfg_.r == 3 && cfg_.k == 6 && n >= 5) {
        auto d = graph_metric(theta_graph(n));
        auto h = degenerate_hypergraph(d);
        const bool witness = verify_non_anchor_witness(h, d);
        row["theta_edges"] = h.edge_count();
        row["theta_non_anchor"] = witness;
        ok = ok && witness && h.edge_count() == bound - 1;
      }
      rows.push_back(std::move(row));
    }
    emit({{"sweep", "theorem2"}, {"r", cfg_.r}, {"k", cfg_.k},
          {"rows", std::move(rows)}, {"ok", ok}});
    return verdict(ok);
  }

  int sweep_theorem3() {
    const auto ns = params_or({5, 6, 7, 8, 9, 10});
    json rows = json::array();
    bool ok = true;
    for (auto n : ns) {
      auto star = star_construction(n);
      const std::size_t expected = 3 * binomial(n - 2, 2) + 1;
      const bool saturated = anchor_via_closure(star);
      rows.push_back({{"n", n},
                      {"edges", star.edge_count()},
                      {"expected", expected},
                      {"saturated", saturated}});
      ok = ok && saturated && star.edge_count() == expected;
    }
    emit({{"sweep", "theorem3"}, {"rows", std::move(rows)}, {"ok", ok}});
    return verdict(ok);
  }

  int sweep_min_sat() {
    auto ns = params_or(cfg_.slow ? std::vector<std::size_t>{6, 7}
                                  : std::vector<std::size_t>{6});
    json rows = json::array();
    bool ok = true;
    for (auto n : ns) {
      if (n >= 7 && !cfg_.slow && cfg_.args.size() > 1)
        throw ParseError("min-sat for n >= 7 requires --slow");
      const auto m = min_saturation_search(n, cfg_.r, cfg_.k, enumeration());
      json row = {{"n", n}, {"min", m}};
      if (cfg_.r == 3 && cfg_.k == 6 && n >= 5) {
        const std::size_t star = 3 * binomial(n - 2, 2) + 1;
        row["star"] = star;
        ok = ok && m == star;
      }
      rows.push_back(std::move(row));
    }
    emit({{"sweep", "min-sat"}, {"r", cfg_.r}, {"k", cfg_.k},
          {"rows", std::move(rows)}, {"ok", ok}});
    return verdict(ok);
  }

  int sweep_menger() {
    const std::size_t count = cfg_.args.size() > 1 ? param(1, "count") : 1000;
    const std::size_t max_n = cfg_.args.size() > 2 ? param(2, "max n") : 8;
    if (max_n < 1)
      throw ParseError("max n must be positive");
    std::size_t violations = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t n = 1 + i % max_n;
      auto d = random_rational_metric(n, cfg_.seed + i);
      validate_metric(d);
      violations += check_menger(d).size();
    }
    emit({{"sweep", "menger"},
          {"metrics", count},
          {"max_n", max_n},
          {"violations", violations},
          {"ok", violations == 0}});
    return verdict(violations == 0);
  }

  int sweep_audit() {
    auto report = minimal_nonmetric_audit();
    json entries = json::array();
    for (const auto &e : report.entries) {
      entries.push_back(
          {{"label", e.label},
           {"deleted_vertex",
            e.deleted_vertex ? json(*e.deleted_vertex) : json(nullptr)},
           {"hypergraph", io::to_json(e.hypergraph)},
           {"verdict", io::to_json(e.verdict)}});
    }
    emit({{"sweep", "audit"},
          {"entries", std::move(entries)},
          {"ok", report.confirmed}});
    return verdict(report.confirmed);
  }

  const RunConfig &cfg_;
  std::istream &in_;
  std::ostream &out_;
  std::ostream &err_;
  bool stdin_used_ = false;
};

} // namespace

RunConfig parse_args(const std::vector<std::string> &argv) {
  RunConfig config;
  CLI::App app{"Metric betweenness and weak hypergraph saturation toolkit",
               "metricsat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", config.output, "Write output to this file");
  app.add_option("--seed", config.seed, "Seed for random generators");
  app.add_option("--budget", config.budget,
                 "Maximum hypergraphs one enumeration may visit");
  app.add_option("-k", config.k, "Clique size k of the saturation rule");
  app.add_option("-r", config.r, "Uniformity r");
  app.add_option("--ceiling", config.ceiling,
                 "Largest n accepted by realize (exponential beyond 6)");
  app.add_option("--jobs", config.jobs, "Worker threads for enumerations")
      ->check(CLI::PositiveNumber);
  std::string format = "json";
  app.add_option("--format", format, "Matrix format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-validate", config.no_validate,
               "Accept matrices that are not metrics");
  app.add_flag("--slow", config.slow, "Include the long min-sat cases");
  app.add_flag("--graph", config.graph, "gen theta: emit the graph itself");

  for (const auto &name : kCommands) {
    auto *sub = app.add_subcommand(name);
    sub->add_option("args", config.args, "Inputs or parameters");
    sub->callback([&config, name] { config.command = name; });
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  app.parse(reversed);
  config.csv = format == "csv";
  return config;
}

int run(const RunConfig &config, std::istream &in, std::ostream &out,
        std::ostream &err) {
  try {
    return Runner(config, in, out, err).dispatch();
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

int main_with_args(const std::vector<std::string> &argv, std::istream &in,
                   std::ostream &out, std::ostream &err) {
  RunConfig config;
  try {
    config = parse_args(argv);
  } catch (const CLI::CallForHelp &) {
    out << kUsage;
    return kAffirmative;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return run(config, in, out, err);
}

} // namespace metricsat::cli
