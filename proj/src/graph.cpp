#include "graph.hpp"

#include "error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace indturan {

Graph::Graph(int n) : n_(n) {
  require(n >= 0, ErrorCode::InvalidArgument, "negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges)
    if (!g.add_edge(u, v))
      fail(ErrorCode::InvalidArgument, "repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  require(u >= 0 && v >= 0 && u < n_ && v < n_, ErrorCode::InvalidArgument,
          "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" + std::to_string(n_));
  require(u != v, ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
  ++edge_count_;
  return true;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  rows_[static_cast<std::size_t>(u)].erase(v);
  rows_[static_cast<std::size_t>(v)].erase(u);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u)
    rows_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edge_count_ != b.edge_count_) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    if (!(a.rows_[i] == b.rows_[i])) return false;
  return true;
}

void validate_partition(const Bipartition& p, int n) {
  require(!p.x.intersects(p.y), ErrorCode::InvalidPartition, "X and Y overlap");
  const VertexSet all = p.x | p.y;
  require(all == VertexSet::full(n), ErrorCode::InvalidPartition, "X and Y do not cover the vertex set");
}

bool VertexMap::injective() const {
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  require(!s.empty(), ErrorCode::EmptyQuery, "common neighbourhood of the empty set");
  VertexSet result = g.vertices();
  s.for_each([&](Vertex v) { result &= g.neighbors(v); });
  return result - s;
}

Subgraph bipartite_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require(!x.intersects(y), ErrorCode::InvalidPartition, "X and Y overlap");
  Subgraph out;
  out.to_host = x.to_vector();
  const auto ys = y.to_vector();
  out.to_host.insert(out.to_host.end(), ys.begin(), ys.end());
  const int nx = x.count();
  out.graph = Graph(static_cast<int>(out.to_host.size()));
  for (int i = 0; i < nx; ++i)
    for (int j = nx; j < out.graph.order(); ++j)
      if (g.adjacent(out.to_host[static_cast<std::size_t>(i)], out.to_host[static_cast<std::size_t>(j)]))
        out.graph.add_edge(i, j);
  return out;
}

Graph cross_edges(const Graph& g, const Bipartition& p) {
  Graph out(g.order());
  p.x.for_each([&](Vertex u) { (g.neighbors(u) & p.y).for_each([&](Vertex v) { out.add_edge(u, v); }); });
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph out;
  out.to_host = s.to_vector();
  out.graph = Graph(static_cast<int>(out.to_host.size()));
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    for (std::size_t j = i + 1; j < out.to_host.size(); ++j)
      if (g.adjacent(out.to_host[i], out.to_host[j])) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

int edges_within(const Graph& g, const VertexSet& s) {
  int twice = 0;
  s.for_each([&](Vertex v) { twice += g.neighbors(v).intersection_count(s); });
  return twice / 2;
}

bool is_k_almost_regular(const Graph& g, const Rational& k) {
  if (g.order() == 0) return true;
  const auto stats = degree_stats(g);
  return Rational(stats.max_degree) <= k * stats.min_degree;
}

DegreeStats degree_stats(const Graph& g) {
  require(g.order() > 0, ErrorCode::EmptyGraph, "degree statistics of the empty graph");
  DegreeStats st;
  st.min_degree = g.degree(0);
  st.max_degree = st.min_degree;
  for (Vertex v = 1; v < g.order(); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    st.max_degree = std::max(st.max_degree, g.degree(v));
  }
  st.average = Rational(BigInt(2 * g.size()), BigInt(g.order()));
  return st;
}

std::optional<Bipartition> two_colouring(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const int su = side[static_cast<std::size_t>(u)];
      bool clash = false;
      g.neighbors(u).for_each([&](Vertex v) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv == -1) {
          sv = 1 - su;
          queue.push_back(v);
        } else if (sv == su) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition p{VertexSet(g.order()), VertexSet(g.order())};
  for (Vertex v = 0; v < g.order(); ++v) (side[static_cast<std::size_t>(v)] == 0 ? p.x : p.y).insert(v);
  return p;
}

bool is_bipartite_with(const Graph& g, const Bipartition& p) {
  bool ok = true;
  p.x.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(p.x); });
  p.y.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(p.y); });
  return ok;
}

}  // namespace indturan
