#include "serialize.hpp"

#include "error.hpp"

#include <sstream>

namespace indturan {

namespace {

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  require(j.is_number_integer(), ErrorCode::ParseError, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  require(v >= INT32_MIN && v <= INT32_MAX, ErrorCode::ParseError, std::string(what) + " out of range");
  return static_cast<int>(v);
}

Rational as_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  require(j.is_string(), ErrorCode::ParseError, std::string(what) + " must be an integer or a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

BigInt as_bigint(const Json& j, const char* what) {
  const auto q = as_rational(j, what);
  require(boost::multiprecision::denominator(q) == 1, ErrorCode::ParseError, std::string(what) + " must be integral");
  return boost::multiprecision::numerator(q);
}

}  // namespace

Json to_json(const VertexSet& s) { return s.to_vector(); }

VertexSet vertex_set_from_json(const Json& j, int universe) {
  require(j.is_array(), ErrorCode::ParseError, "vertex set must be an array");
  VertexSet out(universe);
  for (const auto& v : j) {
    const int x = as_int(v, "vertex");
    require(x >= 0 && x < universe, ErrorCode::InvalidArgument, "vertex " + std::to_string(x) + " out of range");
    require(!out.contains(x), ErrorCode::ParseError, "repeated vertex " + std::to_string(x));
    out.insert(x);
  }
  return out;
}

Json to_json(const VertexMap& m) { return m.image; }

VertexMap vertex_map_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "vertex map must be an array");
  VertexMap m;
  for (const auto& v : j) m.image.push_back(as_int(v, "vertex"));
  return m;
}

Json to_json(const GraphRecord& record) {
  Json j;
  j["n"] = record.graph.order();
  Json edges = Json::array();
  for (const auto& [u, v] : record.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (record.roots) j["roots"] = to_json(*record.roots);
  if (record.partition) j["partition"] = {{"X", to_json(record.partition->x)}, {"Y", to_json(record.partition->y)}};
  return j;
}

GraphRecord graph_from_json(const Json& j) {
  require(j.is_object(), ErrorCode::ParseError, "graph must be a JSON object");
  for (const auto& [key, value] : j.items())
    require(key == "n" || key == "edges" || key == "roots" || key == "partition", ErrorCode::ParseError,
            "unknown graph field '" + key + "'");
  const int n = as_int(field(j, "n"), "n");
  require(n >= 0, ErrorCode::InvalidArgument, "n must be non-negative");
  const auto& edges = field(j, "edges");
  require(edges.is_array(), ErrorCode::ParseError, "edges must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    require(e.is_array() && e.size() == 2, ErrorCode::ParseError, "each edge must be a pair");
    list.emplace_back(as_int(e[0], "endpoint"), as_int(e[1], "endpoint"));
  }
  GraphRecord record{Graph::from_edges(n, list), std::nullopt, std::nullopt};
  if (j.contains("roots")) record.roots = vertex_set_from_json(j.at("roots"), n);
  if (j.contains("partition")) {
    const auto& p = j.at("partition");
    Bipartition parts{vertex_set_from_json(field(p, "X"), n), vertex_set_from_json(field(p, "Y"), n)};
    validate_partition(parts, n);
    record.partition = std::move(parts);
  }
  return record;
}

Json to_json(const RealizabilityCertificate& cert, int s0) {
  Json base;
  base["kind"] = std::string(to_string(cert.base.kind));
  switch (cert.base.kind) {
    case BaseKind::Ktl: base["t"] = cert.base.t; break;
    case BaseKind::Theta: base["len"] = cert.base.len; break;
    case BaseKind::HeightTwo:
      base["r"] = cert.base.r;
      base["t"] = cert.base.t;
      break;
    case BaseKind::Tr11: base["r"] = cert.base.r; break;
  }
  Json j;
  j["a"] = cert.target.a();
  j["b"] = cert.target.b();
  j["base"] = std::move(base);
  j["reductions"] = cert.reductions;
  j["l"] = cert.l;
  j["s0"] = s0;
  j["exponent"] = to_string(cert.exponent);
  j["verified"] = verify_certificate(cert) == CertificateCheck::Ok;
  return j;
}

Json to_json(const DensityReport& report) {
  Json j;
  j["rho"] = to_string(report.rho);
  j["balanced"] = report.balanced;
  j["exponent"] = report.exponent ? Json(to_string(*report.exponent)) : Json(nullptr);
  if (report.witness) {
    j["witness"] = to_json(*report.witness);
    j["witness_rho"] = to_string(report.witness_rho);
  }
  return j;
}

Json to_json(const ExtremalResult& result) {
  GraphRecord record{result.witness, std::nullopt, result.partition};
  Json j;
  j["value"] = result.value;
  j["witness"] = to_json(record);
  j["explored"] = result.explored;
  return j;
}

Json to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const auto& t : trace) out.push_back({{"attempt", t.attempt}, {"event", t.event}, {"detail", t.detail}});
  return out;
}

Thresholds thresholds_from_json(const Json& j) {
  Thresholds th;
  if (j.is_null()) return th;
  require(j.is_object(), ErrorCode::ParseError, "thresholds must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "c") th.c = as_rational(value, k);
    else if (key == "alpha") th.alpha = as_rational(value, k);
    else if (key == "C") th.c_big = as_rational(value, k);
    else if (key == "C_Hs") th.c_hs = as_bigint(value, k);
    else if (key == "m") th.m_blow = as_int(value, k);
    else if (key == "gamma") th.gamma = as_rational(value, k);
    else if (key == "lambda") th.lambda = as_bigint(value, k);
    else if (key == "C1") th.c1 = as_rational(value, k);
    else if (key == "C2") th.c2 = as_rational(value, k);
    else if (key == "C3") th.c3 = as_rational(value, k);
    else if (key == "retries") th.retries = as_int(value, k);
    else if (key == "hall_t") th.hall_t = as_int(value, k);
    else if (key == "search_cap") th.search_cap = as_int(value, k);
    else fail(ErrorCode::ParseError, "unknown threshold '" + key + "'");
  }
  validate(th);
  return th;
}

std::string to_dot(const GraphRecord& record) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < record.graph.order(); ++v) {
    out << "  " << v;
    std::string attrs;
    if (record.roots && record.roots->contains(v)) attrs += "shape=box";
    if (record.partition && record.partition->x.contains(v))
      attrs += std::string(attrs.empty() ? "" : ",") + "style=filled,fillcolor=grey";
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  for (const auto& [u, v] : record.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace indturan
