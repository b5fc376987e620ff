#pragma once

#include "descriptor.hpp"
#include "embeddings.hpp"
#include "realizability.hpp"

#include <json.hpp>

#include <string>

namespace indturan {

using Json = nlohmann::json;

/// {"n": 4, "edges": [[0,1],...], "roots": [...], "partition": {"X": [...], "Y": [...]}}
Json to_json(const GraphRecord& record);
/// Throws ParseError on malformed input and the graph errors on bad content.
GraphRecord graph_from_json(const Json& j);

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, int universe);

Json to_json(const VertexMap& m);
VertexMap vertex_map_from_json(const Json& j);

Json to_json(const RealizabilityCertificate& cert, int s0);
Json to_json(const DensityReport& report);
Json to_json(const ExtremalResult& result);
Json to_json(const std::vector<TraceEntry>& trace);

/// Unset fields keep their defaults; rationals may be given as "p/q" or integers.
Thresholds thresholds_from_json(const Json& j);

/// Graphviz; roots drawn as boxes, X filled grey.
std::string to_dot(const GraphRecord& record);

/// Stable two-space indentation with a trailing newline.
std::string dump(const Json& j);

}  // namespace indturan
