#include "families.hpp"

#include "error.hpp"

#include <algorithm>
#include <string>

namespace indturan {

namespace {

void require_positive(int value, const char* name) {
  require(value >= 1, ErrorCode::InvalidArgument, std::string(name) + " must be positive, got " + std::to_string(value));
}

}  // namespace

RootedGraph make_rooted(Graph graph, VertexSet roots) {
  require(roots.is_subset_of(graph.vertices()), ErrorCode::DegenerateRoot, "root outside the vertex set");
  require(roots.count() < graph.order(), ErrorCode::DegenerateRoot, "root set must be a proper subset");
  RootedGraph f;
  f.graph = std::move(graph);
  f.roots = std::move(roots);
  return f;
}

BipartiteTemplate make_template(Graph graph, VertexSet a, VertexSet b) {
  validate_partition({a, b}, graph.order());
  require(is_bipartite_with(graph, {a, b}), ErrorCode::NotBipartite, "template has an edge inside a part");
  return {std::move(graph), std::move(a), std::move(b)};
}

Hypergraph NeighborhoodHypergraph::as_hypergraph() const {
  Hypergraph out;
  out.vertex_count = static_cast<int>(ground.size());
  for (const auto& e : edges) {
    VertexSet relabelled(out.vertex_count);
    e.for_each([&](Vertex v) {
      const auto it = std::lower_bound(ground.begin(), ground.end(), v);
      relabelled.insert(static_cast<Vertex>(it - ground.begin()));
    });
    out.edges.push_back(relabelled);
  }
  return out;
}

int NeighborhoodHypergraph::max_edge_size() const {
  int k = 0;
  for (const auto& e : edges) k = std::max(k, e.count());
  return k;
}

int BlowupHypergraph::uniformity() const {
  int k = 0;
  for (const auto& e : pattern.edges) k = std::max(k, e.count());
  return k;
}

RootedGraph height_two_tree(int r, int t) {
  require_positive(r, "r");
  require_positive(t, "t");
  const int n = 1 + r + r * t;
  Graph g(n);
  VertexSet roots(n);
  for (int i = 0; i < r; ++i) {
    const Vertex y = 1 + i;
    g.add_edge(0, y);
    for (int j = 0; j < t; ++j) {
      const Vertex z = 1 + r + i * t + j;
      g.add_edge(y, z);
      roots.insert(z);
    }
  }
  return make_rooted(std::move(g), std::move(roots));
}

RootedGraph tree_r11(int r) {
  require_positive(r, "r");
  const int n = 2 * r + 2;
  Graph g(n);
  VertexSet roots(n);
  for (int i = 1; i <= r; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, r + i);
    roots.insert(r + i);
  }
  g.add_edge(0, 2 * r + 1);
  roots.insert(2 * r + 1);
  return make_rooted(std::move(g), std::move(roots));
}

RootedGraph rooted_path(int len) {
  require(len >= 2, ErrorCode::DegenerateRoot, "rooted path needs length >= 2, got " + std::to_string(len));
  Graph g(len + 1);
  Vertex prev = 0;
  for (Vertex v = 2; v <= len; ++v) {
    g.add_edge(prev, v);
    prev = v;
  }
  g.add_edge(prev, 1);
  return make_rooted(std::move(g), VertexSet(len + 1, {0, 1}));
}

RootedGraph rooted_star(int r) {
  require_positive(r, "r");
  Graph g(r + 1);
  VertexSet roots(r + 1);
  for (Vertex v = 1; v <= r; ++v) {
    g.add_edge(0, v);
    roots.insert(v);
  }
  return make_rooted(std::move(g), std::move(roots));
}

RootedGraph rooted_power(const RootedGraph& f, int l) {
  require_positive(l, "l");
  const auto root_list = f.roots.to_vector();
  const auto free_list = f.non_roots().to_vector();
  const int nr = static_cast<int>(root_list.size());
  const int q = static_cast<int>(free_list.size());
  const int n = nr + l * q;

  RootedGraph out;
  out.graph = Graph(n);
  out.roots = VertexSet(n);
  for (int i = 0; i < nr; ++i) out.roots.insert(i);

  out.copies.assign(static_cast<std::size_t>(l), VertexMap{std::vector<Vertex>(static_cast<std::size_t>(f.graph.order()))});
  for (int c = 0; c < l; ++c) {
    auto& image = out.copies[static_cast<std::size_t>(c)].image;
    for (int i = 0; i < nr; ++i) image[static_cast<std::size_t>(root_list[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < q; ++i) image[static_cast<std::size_t>(free_list[static_cast<std::size_t>(i)])] = nr + c * q + i;
  }
  for (const auto& [u, v] : f.graph.edges())
    for (const auto& copy : out.copies) out.graph.add_edge(copy[u], copy[v]);
  return out;
}

Graph theta(int len, int t) {
  require_positive(len, "len");
  require_positive(t, "t");
  if (len == 1) {
    require(t == 1, ErrorCode::Multigraph, "theta with len 1 and t >= 2 has parallel edges");
    return Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  }
  return rooted_power(rooted_path(len), t).graph;
}

BipartiteTemplate complete_bipartite(int s, int t) {
  require_positive(s, "s");
  require_positive(t, "t");
  Graph g(s + t);
  VertexSet a(s + t), b(s + t);
  for (Vertex u = 0; u < s; ++u) {
    a.insert(u);
    for (Vertex v = s; v < s + t; ++v) g.add_edge(u, v);
  }
  for (Vertex v = s; v < s + t; ++v) b.insert(v);
  return make_template(std::move(g), std::move(a), std::move(b));
}

namespace {

struct KttExtension {
  Graph graph;
  Bipartition parts;
  VertexSet added;
};

KttExtension extend_with_ktt(const Graph& g, const Bipartition& parts, int t) {
  const int h = g.order();
  const int n = h + 2 * t;
  KttExtension out{Graph(n), {VertexSet(n), VertexSet(n)}, VertexSet(n)};
  for (const auto& [u, v] : g.edges()) out.graph.add_edge(u, v);
  for (int i = 0; i < t; ++i) {
    const Vertex c = h + i;
    out.added.insert(c);
    out.added.insert(h + t + i);
    for (int j = 0; j < t; ++j) out.graph.add_edge(c, h + t + j);
    parts.y.for_each([&](Vertex b) { out.graph.add_edge(b, c); });
    parts.x.for_each([&](Vertex a) { out.graph.add_edge(a, h + t + i); });
  }
  out.parts.x = parts.x | (out.added & VertexSet::full(h + t));
  out.parts.y = parts.y | (out.added - VertexSet::full(h + t));
  return out;
}

}  // namespace

BipartiteTemplate attach_ktt(const BipartiteTemplate& h, int t) {
  require(t >= 0, ErrorCode::InvalidArgument, "t must be non-negative");
  auto ext = extend_with_ktt(h.graph, h.parts(), t);
  return make_template(std::move(ext.graph), std::move(ext.parts.x), std::move(ext.parts.y));
}

AttachedRooted attach_ktt_rooted(const RootedGraph& f, const Bipartition& parts, int t) {
  require(t >= 0, ErrorCode::InvalidArgument, "t must be non-negative");
  validate_partition(parts, f.graph.order());
  require(is_bipartite_with(f.graph, parts), ErrorCode::NotBipartite, "parts are not a bipartition of F");
  if (t == 0) return {f, parts};
  auto ext = extend_with_ktt(f.graph, parts, t);
  RootedGraph rooted = make_rooted(std::move(ext.graph), f.roots | ext.added);
  return {std::move(rooted), std::move(ext.parts)};
}

NeighborhoodHypergraph neighborhood_hypergraph(const BipartiteTemplate& h) {
  NeighborhoodHypergraph out;
  out.ground = h.a.to_vector();
  h.b.for_each([&](Vertex b) {
    out.sources.push_back(b);
    out.edges.push_back(h.graph.neighbors(b) & h.a);
  });
  return out;
}

BlowupHypergraph blowup(const Hypergraph& pattern, int m) {
  require(m >= 1, ErrorCode::EmptyBlowup, "blowup multiplicity must be positive");
  BlowupHypergraph out;
  out.pattern = pattern;
  out.m = m;
  const int n = pattern.vertex_count * m;
  for (Vertex v = 0; v < pattern.vertex_count; ++v) {
    VertexSet part(n);
    for (int j = 0; j < m; ++j) part.insert(v * m + j);
    out.parts.push_back(std::move(part));
  }
  for (const auto& e : pattern.edges) {
    const auto members = e.to_vector();
    std::vector<int> pick(members.size(), 0);
    while (true) {
      VertexSet edge(n);
      for (std::size_t i = 0; i < members.size(); ++i) edge.insert(members[i] * m + pick[i]);
      out.edges.push_back(std::move(edge));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == m) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

}  // namespace indturan
