#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "metricsat/io.hpp"

using namespace metricsat;
using io::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json value() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> argv, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::main_with_args(argv, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name,
                                const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / ("metricsat_" + name);
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kError);
  CHECK(run({"frobnicate"}).code == cli::kError);
  CHECK(run({"gen", "pentagon"}).code == cli::kError);
  CHECK(run({"gen", "star"}).code == cli::kError);
  CHECK(run({"gen", "star", "x"}).code == cli::kError);
  CHECK(run({"--format", "xml", "degenerate"}).code == cli::kError);
  CHECK(run({"sweep", "min-sat", "7"}).code == cli::kError);
  auto help = run({"--help"});
  CHECK(help.code == cli::kAffirmative);
  CHECK(help.out.find("usage: metricsat") != std::string::npos);
}

TEST_CASE("library errors exit 2 with a message") {
  auto bad = run({"degenerate"}, R"({"n":3,"dist":[[0,1,3],[1,0,1],[3,1,0]]})");
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"degenerate"}, "{oops").code == cli::kError);
  CHECK(run({"degenerate", "/nonexistent/file.json"}).code == cli::kError);
  CHECK(run({"gen", "star", "4"}).code == cli::kError);
  CHECK(run({"realize"}, io::to_json(UniformHypergraph(7, 3)).dump()).code ==
        cli::kError);
}

TEST_CASE("gen and degenerate") {
  auto star = run({"gen", "star", "6"});
  REQUIRE(star.code == 0);
  CHECK(star.value()["edges"].size() == 19);

  auto theta = run({"gen", "theta", "6"});
  REQUIRE(theta.code == 0);
  auto deg = run({"degenerate"}, theta.out);
  REQUIRE(deg.code == 0);
  CHECK(deg.value()["edges"].size() == 18);

  auto graph = run({"gen", "theta", "6", "--graph"});
  REQUIRE(graph.code == 0);
  CHECK(run({"degenerate"}, graph.out).out == deg.out);

  auto csv = run({"gen", "theta", "6", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("6\n", 0) == 0);
  CHECK(run({"degenerate", "--format", "csv"}, csv.out).out == deg.out);

  auto line = run({"gen", "line", "0", "1/2", "3"});
  REQUIRE(line.code == 0);
  CHECK(line.value()["dist"][0][1] == "1/2");
  CHECK(run({"gen", "line", "0", "0"}).code == cli::kError);
}

TEST_CASE("no-validate") {
  const std::string bad = R"({"n":3,"dist":[[0,1,3],[1,0,1],[3,1,0]]})";
  auto r = run({"reconstruct", "--no-validate"}, bad);
  CHECK(r.code != cli::kError);
}

TEST_CASE("close and verify-cert pipeline") {
  auto closed = run({"close"}, run({"gen", "star", "7"}).out);
  REQUIRE(closed.code == 0);
  auto j = closed.value();
  CHECK(j["steps"].size() == 4);
  CHECK(j["closure"].size() == 35);

  auto verified = run({"verify-cert"}, closed.out);
  CHECK(verified.code == 0);
  CHECK(verified.value()["valid"] == true);

  auto broken = j;
  broken["steps"][0]["T"] = json::array({0, 1, 2});
  auto rejected = run({"verify-cert"}, broken.dump());
  CHECK(rejected.code == cli::kNegative);
  CHECK(rejected.value()["valid"] == false);
}

TEST_CASE("saturated, anchor and witness-check") {
  auto star = run({"gen", "star", "8"}).out;
  CHECK(run({"saturated"}, star).code == 0);
  CHECK(run({"anchor"}, star).value()["anchor"] == "certified");

  auto theta_metric = run({"gen", "theta", "7"}).out;
  auto theta = run({"degenerate"}, theta_metric).out;
  CHECK(run({"saturated"}, theta).code == cli::kNegative);
  auto anchor = run({"anchor"}, theta);
  CHECK(anchor.code == cli::kNegative);
  CHECK(anchor.value()["anchor"] == "inconclusive");

  auto metric_path = temp_file("theta7.json", theta_metric);
  auto check = run({"witness-check", "-", metric_path.string()}, theta);
  CHECK(check.code == 0);
  CHECK(check.value()["non_anchor_witness"] == true);

  auto line_path = temp_file("line7.json", run({"gen", "line", "0", "1", "2", "3",
                                                "4", "5", "6"})
                                               .out);
  auto rejected = run({"witness-check", "-", line_path.string()}, theta);
  CHECK(rejected.code == cli::kNegative);
  CHECK(run({"witness-check", "-"}, theta).code == cli::kError);

  CHECK(run({"saturated", "-k", "4", "-r", "3"}, star).code == 0);
}

TEST_CASE("reconstruct") {
  auto line = run({"reconstruct"}, run({"gen", "line", "4", "0", "9", "2"}).out);
  REQUIRE(line.code == 0);
  CHECK(line.value()["order"] == json::parse("[1,3,0,2]"));

  auto cycle = run({"reconstruct"}, run({"gen", "cycle4"}).out);
  CHECK(cycle.code == cli::kNegative);
  CHECK(cycle.value()["order"].is_null());
}

TEST_CASE("realize") {
  auto metric = run({"realize"}, run({"gen", "star", "5"}).out);
  CHECK(metric.code == 0);
  CHECK(metric.value()["status"] == "metric");
  CHECK(metric.value()["witness"].is_object());

  auto root = run({"realize"}, run({"gen", "star", "6"}).out);
  CHECK(root.code == cli::kNegative);
  CHECK(root.value()["status"] == "non-metric");

  auto warned = run({"realize", "--ceiling", "7"}, run({"gen", "star", "5"}).out);
  CHECK(warned.code == 0);
  CHECK(warned.err.find("warning") != std::string::npos);
}

TEST_CASE("sweeps") {
  auto t2 = run({"sweep", "theorem2", "6"});
  CHECK(t2.code == 0);
  CHECK(t2.value()["rows"][0]["size"] == 19);
  CHECK(t2.value()["rows"][0]["theta_edges"] == 18);

  auto t3 = run({"sweep", "theorem3"});
  CHECK(t3.code == 0);
  CHECK(t3.value()["rows"].size() == 6);

  auto ms = run({"sweep", "min-sat"});
  CHECK(ms.code == 0);
  CHECK(ms.value()["rows"][0]["min"] == 19);

  auto menger = run({"sweep", "menger", "200", "6"});
  CHECK(menger.code == 0);
  CHECK(menger.value()["violations"] == 0);

  auto audit = run({"sweep", "audit"});
  CHECK(audit.code == 0);
  CHECK(audit.value()["entries"].size() == 7);

  CHECK(run({"sweep", "theorem2", "7", "--budget", "10"}).code == cli::kError);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  CHECK(run({"gen", "random", "7", "--seed", "9"}).out ==
        run({"gen", "random", "7", "--seed", "9"}).out);
  CHECK(run({"gen", "random", "7", "--seed", "9"}).out !=
        run({"gen", "random", "7", "--seed", "10"}).out);
  const auto a = run({"sweep", "theorem2", "6", "--jobs", "1"});
  const auto b = run({"sweep", "theorem2", "6", "--jobs", "4"});
  CHECK(a.out == b.out);
  CHECK(run({"sweep", "audit"}).out == run({"sweep", "audit"}).out);
}

TEST_CASE("output file option") {
  auto path = std::filesystem::temp_directory_path() / "metricsat_out.json";
  std::filesystem::remove(path);
  auto r = run({"gen", "star", "5", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::string text((std::istreambuf_iterator<char>(file)), {});
  CHECK(json::parse(text)["edges"].size() == 10);
}
