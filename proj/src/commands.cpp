#include "commands.hpp"

#include "error.hpp"
#include "fuzz.hpp"

namespace indturan {

namespace {

const Json& need(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("request is missing '") + key + "'");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const auto& v = need(j, key);
  require(v.is_number_integer(), ErrorCode::ParseError, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  require(j.is_object(), ErrorCode::ParseError, "request must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : keys) ok = ok || key == k;
    require(ok, ErrorCode::ParseError, "unknown request field '" + key + "'");
  }
}

Host host_of(const GraphRecord& record, int s) { return {record.graph, record.partition, s}; }

Graph edges_on(const Json& j, int n) {
  const auto& edges = j.is_object() ? need(j, "edges") : j;
  require(edges.is_array(), ErrorCode::ParseError, "edge list must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(), ErrorCode::ParseError,
            "each edge must be a pair of integers");
    list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, list);
}

Json outcome_json(const EmbeddingOutcome& outcome) {
  Json j;
  j["found"] = outcome.found;
  j["map"] = outcome.map ? to_json(*outcome.map) : Json(nullptr);
  return j;
}

EmbedResult embed_tree(const Json& req) {
  only_keys(req, {"host", "L", "tree", "d", "s"});
  const auto host_record = graph_from_json(need(req, "host"));
  const int s = req.contains("s") ? need_int(req, "s") : 2;
  const Host host = host_of(host_record, s);
  HostSubgraph l = whole(host.graph);
  if (req.contains("L")) {
    const auto& lj = req.at("L");
    l.vertices = vertex_set_from_json(need(lj, "vertices"), host.graph.order());
    l.edges = edges_on(lj, host.graph.order());
  }
  const auto tree = graph_from_json(need(req, "tree")).graph;
  const auto report = greedy_tree_embed(host, l, tree, need_int(req, "d"));
  Json copies = Json::array();
  bool verified = true;
  for (const auto& c : report.copies) {
    copies.push_back(to_json(c));
    verified = verified && is_induced_copy(host.graph, tree, c);
  }
  Json result;
  result["copies"] = std::move(copies);
  result["count"] = report.copies.size();
  result["verified"] = verified;
  result["hypothesis_holds"] = report.hypothesis_holds;
  result["guaranteed"] = to_string(report.guaranteed);
  return {result, Json::array()};
}

Graph cross_or(const Json& req, const char* key, const Host& host) {
  if (req.contains(key)) return edges_on(req.at(key), host.graph.order());
  require(host.partition.has_value(), ErrorCode::NoPartition, "host has no bipartition");
  return cross_edges(host.graph, *host.partition);
}

EmbedResult embed_keylemma(const Json& req, std::uint64_t seed) {
  only_keys(req, {"host", "L", "template", "parts", "rich_sets", "thresholds", "s"});
  const auto host_record = graph_from_json(need(req, "host"));
  const Host host = host_of(host_record, req.contains("s") ? need_int(req, "s") : 2);
  require(host.partition.has_value(), ErrorCode::NoPartition, "host has no bipartition");
  const auto l = cross_or(req, "L", host);
  const auto h = as_template(graph_from_json(need(req, "template")));
  KeyLemmaInput input;
  const auto& parts = need(req, "parts");
  require(parts.is_array(), ErrorCode::ParseError, "parts must be an array");
  for (const auto& p : parts) input.parts.push_back(vertex_set_from_json(p, host.graph.order()));
  if (req.contains("rich_sets")) {
    std::vector<VertexSet> d;
    for (const auto& s : req.at("rich_sets")) d.push_back(vertex_set_from_json(s, host.graph.order()));
    input.rich_sets = std::move(d);
  }
  const auto th = thresholds_from_json(req.contains("thresholds") ? req.at("thresholds") : Json(nullptr));
  const auto outcome = key_lemma_embed(host, l, h, input, th, seed);
  auto result = outcome_json(outcome);
  result["verified"] = outcome.map && is_bip_induced_copy(host, h, *outcome.map);
  return {result, to_json(outcome.trace)};
}

EmbedResult embed_asym(const Json& req, std::uint64_t seed) {
  only_keys(req, {"host", "M", "template", "delta_y", "thresholds", "s"});
  const auto host_record = graph_from_json(need(req, "host"));
  const Host host = host_of(host_record, req.contains("s") ? need_int(req, "s") : 2);
  require(host.partition.has_value(), ErrorCode::NoPartition, "host has no bipartition");
  const auto m = cross_or(req, "M", host);
  const auto h = as_template(graph_from_json(need(req, "template")));
  const auto th = thresholds_from_json(req.contains("thresholds") ? req.at("thresholds") : Json(nullptr));
  const auto outcome = asymmetric_embed(host, m, h, need_int(req, "delta_y"), th, seed);
  auto result = outcome_json(outcome);
  result["verified"] = outcome.map && is_bip_induced_copy(host, h, *outcome.map);
  return {result, to_json(outcome.trace)};
}

EmbedResult embed_extract(const Json& req) {
  only_keys(req, {"host", "f", "copies", "l", "s"});
  const auto g = graph_from_json(need(req, "host")).graph;
  const auto f = as_rooted(graph_from_json(need(req, "f")));
  std::vector<VertexMap> copies;
  const auto& cj = need(req, "copies");
  require(cj.is_array(), ErrorCode::ParseError, "copies must be an array");
  for (const auto& c : cj) copies.push_back(vertex_map_from_json(c));
  const int l = need_int(req, "l");
  const auto out = extract_induced_power(g, copies, f, l, need_int(req, "s"));
  auto result = outcome_json(out.outcome);
  result["chosen"] = out.chosen;
  result["monochromatic_clique_free"] = out.monochromatic_clique_free;
  result["kss"] = out.kss ? Json{{"left", to_json(out.kss->left)}, {"right", to_json(out.kss->right)}} : Json(nullptr);
  result["verified"] = out.outcome.map && is_induced_copy(g, rooted_power(f, l).graph, *out.outcome.map);
  return {result, to_json(out.outcome.trace)};
}

}  // namespace

Json realize_command(std::int64_t a, std::int64_t b, int l) {
  const auto cert = derive(a, b, l);
  const auto witness = build_witness(cert, l);
  return to_json(cert, witness.s0);
}

Json sweep_command(int a_max, int b_max, int threads) {
  Json out = Json::array();
  for (const auto& e : enumerate_realizable(a_max, b_max, threads)) {
    auto j = to_json(e.certificate, 0);
    j.erase("s0");
    j["check"] = std::string(to_string(e.check));
    out.push_back(std::move(j));
  }
  return out;
}

ExtremalMode parse_extremal_mode(std::string_view name) {
  if (name == "star") return ExtremalMode::Star;
  if (name == "plain") return ExtremalMode::Plain;
  if (name == "bip") return ExtremalMode::Bip;
  fail(ErrorCode::InvalidArgument, "unknown extremal mode '" + std::string(name) + "'");
}

Json extremal_command(int n, const GraphRecord& h, int s, ExtremalMode mode, int threads, int max_n) {
  ExtremalOptions options{max_n, threads};
  ExtremalResult result;
  switch (mode) {
    case ExtremalMode::Star: result = extremal_star(n, h.graph, s, options); break;
    case ExtremalMode::Plain: result = extremal_plain(n, h.graph, options); break;
    case ExtremalMode::Bip: result = extremal_bip_star(n, as_template(h), s, options); break;
  }
  auto j = to_json(result);
  j["n"] = n;
  j["s"] = s;
  return j;
}

EmbedResult embed_command(std::string_view kind, const Json& request, std::uint64_t seed) {
  if (kind == "tree") return embed_tree(request);
  if (kind == "keylemma") return embed_keylemma(request, seed);
  if (kind == "asym") return embed_asym(request, seed);
  if (kind == "extract") return embed_extract(request);
  fail(ErrorCode::InvalidArgument, "unknown embedding '" + std::string(kind) + "'");
}

Json check_command(std::string_view kind, int trials, std::uint64_t seed, int threads) {
  FuzzReport report;
  if (kind == "badset") report = fuzz_bad_set(trials, seed, threads);
  else if (kind == "rich") report = fuzz_rich_set(trials, seed, threads);
  else if (kind == "kst") report = fuzz_kst(trials, seed, threads);
  else fail(ErrorCode::InvalidArgument, "unknown check '" + std::string(kind) + "'");
  Json j;
  j["kind"] = std::string(kind);
  j["trials"] = report.trials;
  j["checked"] = report.checked;
  j["violations"] = report.violations;
  j["failures"] = report.failures;
  return j;
}

}  // namespace indturan
