#include "descriptor.hpp"

#include "error.hpp"

#include <charconv>
#include <map>
#include <set>

namespace indturan {

namespace {

std::string_view trim_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  require(ec == std::errc() && ptr == end, ErrorCode::ParseError,
          "parameter " + std::string(key) + " expects an integer, got '" + std::string(text) + "'");
  return value;
}

struct Parsed {
  std::string kind;
  std::map<std::string, std::string, std::less<>> params;
};

/// Splits "kind:k=v,k=v". A base=... value runs to the last ",key=" of a
/// known trailing key, so nested descriptors need no escaping.
Parsed split(std::string_view text) {
  text = trim_parens(text);
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, ErrorCode::ParseError, "descriptor needs 'kind:params': " + std::string(text));
  Parsed out{std::string(text.substr(0, colon)), {}};
  std::string_view rest = text.substr(colon + 1);
  if (rest.starts_with("base=")) {
    std::set<std::string, std::less<>> trailing;
    if (out.kind == "power") trailing = {"l"};
    if (out.kind == "attach") trailing = {"t"};
    std::size_t cut = std::string_view::npos;
    for (const auto& key : trailing) {
      const auto at = rest.rfind("," + key + "=");
      if (at != std::string_view::npos && (cut == std::string_view::npos || at > cut)) cut = at;
    }
    out.params["base"] = std::string(trim_parens(rest.substr(5, cut == std::string_view::npos ? cut : cut - 5)));
    rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
  }
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    require(eq != std::string_view::npos && eq > 0, ErrorCode::ParseError, "malformed parameter '" + std::string(item) + "'");
    const auto [it, fresh] = out.params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    require(fresh, ErrorCode::ParseError, "repeated parameter " + it->first);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

class Params {
 public:
  Params(const Parsed& p, std::initializer_list<std::string_view> allowed) : p_(p) {
    for (const auto& [key, value] : p.params) {
      bool ok = false;
      for (auto a : allowed) ok = ok || a == key;
      require(ok, ErrorCode::ParseError, "unknown parameter '" + key + "' for family " + p.kind);
    }
  }
  int integer(std::string_view key) const { return parse_int(key, text(key)); }
  const std::string& text(std::string_view key) const {
    const auto it = p_.params.find(key);
    require(it != p_.params.end(), ErrorCode::ParseError, "family " + p_.kind + " needs parameter " + std::string(key));
    return it->second;
  }

 private:
  const Parsed& p_;
};

GraphRecord from_rooted(RootedGraph f) {
  GraphRecord r{f.graph, f.roots, two_colouring(f.graph)};
  return r;
}

GraphRecord from_template(const BipartiteTemplate& t) { return {t.graph, std::nullopt, t.parts()}; }

}  // namespace

RootedGraph as_rooted(const GraphRecord& record) {
  require(record.roots.has_value(), ErrorCode::InvalidArgument, "graph has no root set");
  return make_rooted(record.graph, *record.roots);
}

BipartiteTemplate as_template(const GraphRecord& record) {
  require(record.partition.has_value(), ErrorCode::InvalidArgument, "graph has no bipartition");
  return make_template(record.graph, record.partition->x, record.partition->y);
}

GraphRecord build_family(std::string_view descriptor) {
  const auto parsed = split(descriptor);
  const auto& kind = parsed.kind;
  if (kind == "Trt") {
    Params p(parsed, {"r", "t"});
    return from_rooted(height_two_tree(p.integer("r"), p.integer("t")));
  }
  if (kind == "Tr11") {
    Params p(parsed, {"r"});
    return from_rooted(tree_r11(p.integer("r")));
  }
  if (kind == "path") {
    Params p(parsed, {"len"});
    return from_rooted(rooted_path(p.integer("len")));
  }
  if (kind == "star") {
    Params p(parsed, {"r"});
    return from_rooted(rooted_star(p.integer("r")));
  }
  if (kind == "theta") {
    Params p(parsed, {"len", "t"});
    Graph g = theta(p.integer("len"), p.integer("t"));
    auto parts = two_colouring(g);
    return {std::move(g), std::nullopt, std::move(parts)};
  }
  if (kind == "cycle" || kind == "pathgraph") {
    Params p(parsed, {"n"});
    const int n = p.integer("n");
    require(n >= (kind == "cycle" ? 3 : 1), ErrorCode::InvalidArgument, "too few vertices for " + kind);
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    if (kind == "cycle") g.add_edge(n - 1, 0);
    auto parts = two_colouring(g);
    return {std::move(g), std::nullopt, std::move(parts)};
  }
  if (kind == "Kst") {
    Params p(parsed, {"s", "t"});
    return from_template(complete_bipartite(p.integer("s"), p.integer("t")));
  }
  if (kind == "power") {
    Params p(parsed, {"base", "l"});
    return from_rooted(rooted_power(as_rooted(build_family(p.text("base"))), p.integer("l")));
  }
  if (kind == "f1") {
    Params p(parsed, {"base"});
    const auto base = build_family(p.text("base"));
    const auto f = as_rooted(base);
    require(base.partition.has_value(), ErrorCode::NotBipartite, "f1 needs a bipartite base");
    auto attached = attach_ktt_rooted(f, *base.partition, 1);
    return {attached.rooted.graph, attached.rooted.roots, attached.parts};
  }
  if (kind == "attach") {
    Params p(parsed, {"base", "t"});
    return from_template(attach_ktt(as_template(build_family(p.text("base"))), p.integer("t")));
  }
  fail(ErrorCode::ParseError, "unknown family kind '" + kind + "'");
}

}  // namespace indturan
