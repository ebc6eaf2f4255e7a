#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "metricsat/hypergraph.hpp"
#include "metricsat/lines.hpp"
#include "metricsat/metric.hpp"
#include "metricsat/realizability.hpp"
#include "metricsat/saturation.hpp"

namespace metricsat::io {

using nlohmann::json;

// Matrix: {"n": int, "dist": [[entry, ...], ...]} with entries given as
// integer literals or "p/q" strings. Writers always emit strings.
DistanceMatrix matrix_from_json(const json &j, bool validate = true);
json to_json(const DistanceMatrix &d);

// CSV matrix: first line n, then n lines of comma-separated entries.
DistanceMatrix matrix_from_csv(std::string_view text, bool validate = true);
std::string to_csv(const DistanceMatrix &d);

// Graph: {"n": int, "edges": [[u, v], ...]}, 0-based.
Graph graph_from_json(const json &j);
json to_json(const Graph &g);

// Hypergraph: {"n": int, "r": int, "edges": [[sorted ints], ...]}, edges in
// colex order on output.
UniformHypergraph hypergraph_from_json(const json &j);
json to_json(const UniformHypergraph &h);

// Certificate: {"n","r","k","base":[...],"steps":[{"T":[...],"S":[...]}]}.
// Unknown keys are ignored.
ClosureCertificate certificate_from_json(const json &j);
json to_json(const ClosureCertificate &c);

// Order: {"order": [ints]}.
LinearOrder order_from_json(const json &j);
json to_json(const LinearOrder &o);

// Verdict: {"status": "metric"|"non-metric", "witness": matrix|null,
// "explored": int}.
json to_json(const RealizabilityVerdict &v);

/// Parses text as JSON, converting library errors to ParseError.
json parse(std::string_view text);

} // namespace metricsat::io
