#pragma once

#include "rational.hpp"
#include "vertex_set.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace indturan {

/// Unordered pair, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices [0, n) with bitset adjacency rows.
 *
 * add_edge rejects loops and out-of-range endpoints; repeated insertion of
 * the same pair is a no-op (the edge set is a set).
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws InvalidArgument on loops, out-of-range endpoints or repeated pairs.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return edge_count_; }

  /// Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return rows_[static_cast<std::size_t>(v)].count(); }

  /// Sorted, each edge once with first < second.
  std::vector<Edge> edges() const;

  VertexSet vertices() const { return VertexSet::full(n_); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> rows_;
};

/// Ordered partition (X, Y) of a vertex set.
struct Bipartition {
  VertexSet x;
  VertexSet y;
};

/// Throws InvalidPartition unless x, y are disjoint and cover [0, n).
void validate_partition(const Bipartition& p, int n);

/// A graph to search in, with an optional bipartition and a K_{s,s} parameter.
struct Host {
  Graph graph;
  std::optional<Bipartition> partition;
  int s = 2;
};

/// Injective assignment pattern vertex i -> host vertex image[i].
struct VertexMap {
  std::vector<Vertex> image;

  Vertex operator[](Vertex pattern_vertex) const { return image[static_cast<std::size_t>(pattern_vertex)]; }
  std::size_t size() const { return image.size(); }
  bool injective() const;
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;
};

/// A graph extracted from a host, with to_host[i] the host vertex of local vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

/// N*(S): vertices adjacent to every member of S. Members of S are never
/// returned. Throws EmptyQuery for empty S.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

/// G[X,Y] on X u Y with only the cross edges; local vertices list X then Y in
/// increasing order. Throws InvalidPartition if X and Y overlap.
Subgraph bipartite_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Spanning version of G[X,Y]: same vertex set as g, cross edges only.
Graph cross_edges(const Graph& g, const Bipartition& p);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Number of edges with both ends in S.
int edges_within(const Graph& g, const VertexSet& s);

/// Delta(g) <= K * delta(g).
bool is_k_almost_regular(const Graph& g, const Rational& k);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  Rational average;
};

/// Throws EmptyGraph when g has no vertices.
DegreeStats degree_stats(const Graph& g);

/// Proper 2-colouring; within each component the smallest vertex goes to X.
std::optional<Bipartition> two_colouring(const Graph& g);

bool is_bipartite_with(const Graph& g, const Bipartition& p);

}  // namespace indturan
