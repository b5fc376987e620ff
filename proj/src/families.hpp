#pragma once

#include "graph.hpp"

#include <vector>

namespace indturan {

/// A graph F with a proper root set R.
struct RootedGraph {
  Graph graph;
  VertexSet roots;
  /// Filled by rooted_power: copies[c][v] is the image of original vertex v
  /// in copy c. Empty for graphs not built as powers.
  std::vector<VertexMap> copies;

  VertexSet non_roots() const { return graph.vertices() - roots; }
};

/// Throws DegenerateRoot unless roots is a proper subset of V(graph).
RootedGraph make_rooted(Graph graph, VertexSet roots);

/// A bipartite pattern H with ordered parts (A, B).
struct BipartiteTemplate {
  Graph graph;
  VertexSet a;
  VertexSet b;

  int h() const { return graph.order(); }
  Bipartition parts() const { return {a, b}; }
};

/// Throws InvalidPartition / NotBipartite when (a, b) is not a bipartition of graph.
BipartiteTemplate make_template(Graph graph, VertexSet a, VertexSet b);

/// A multi-hypergraph on vertices [0, vertex_count).
struct Hypergraph {
  int vertex_count = 0;
  std::vector<VertexSet> edges;
};

/// F_A(H): one hyperedge N_H(b) for each b in B, multiplicities kept.
struct NeighborhoodHypergraph {
  std::vector<Vertex> ground;   // members of A, increasing
  std::vector<Vertex> sources;  // the b of each hyperedge, increasing
  std::vector<VertexSet> edges; // subsets of A, in template vertex ids

  /// Relabels A to [0, |A|) in increasing order.
  Hypergraph as_hypergraph() const;
  /// Largest hyperedge size.
  int max_edge_size() const;
};

/// m-blowup: vertex v of the pattern becomes the part {v*m, ..., v*m+m-1} and
/// each pattern edge becomes the complete |e|-partite hypergraph on its parts.
struct BlowupHypergraph {
  Hypergraph pattern;
  int m = 0;
  std::vector<VertexSet> parts;
  std::vector<VertexSet> edges;

  int uniformity() const;
};

/// T_{r,t}: centre 0, middle vertices 1..r, leaves 1+r+i*t+j (row-major);
/// roots are the r*t leaves.
RootedGraph height_two_tree(int r, int t);

/// T_{r,1,1}: a = 0, b_i = i (1 <= i <= r), c_i = r + i, extra leaf b_{r+1} = 2r+1;
/// roots are the leaves c_1..c_r and b_{r+1}.
RootedGraph tree_r11(int r);

/// Path with len edges; endpoints are vertices 0 and 1 (the roots) and the
/// interior runs 2, 3, ..., len in order: 0-2-3-...-len-1.
/// Throws DegenerateRoot for len < 2.
RootedGraph rooted_path(int len);

/// Star with centre 0 and leaves 1..r, rooted at the leaves.
RootedGraph rooted_star(int r);

/**
 * F^l_R: l copies of F glued along R and disjoint elsewhere.
 *
 * Roots take ids 0..|R|-1 (increasing original order); copy c's non-roots
 * follow at |R| + c*q + i. Edges with both ends in R are shared by every copy
 * and appear once.
 */
RootedGraph rooted_power(const RootedGraph& f, int l);

/// Theta_len^t, i.e. rooted_power(rooted_path(len), t) without the roots.
/// Throws Multigraph for len == 1 and t >= 2.
Graph theta(int len, int t);

/// K_{s,t} with A = {0..s-1} and B = {s..s+t-1}.
BipartiteTemplate complete_bipartite(int s, int t);

/// H(t): H plus K_{t,t} on new parts C, D (C = h..h+t-1, D = h+t..h+2t-1),
/// joined completely A-D and B-C. New parts are (A u C, B u D).
BipartiteTemplate attach_ktt(const BipartiteTemplate& h, int t);

struct AttachedRooted {
  RootedGraph rooted;
  Bipartition parts;
};

/// Rooted variant of attach_ktt: the 2t added vertices join the roots.
/// t = 0 returns f unchanged. Throws NotBipartite if parts is not a proper
/// 2-colouring of f.
AttachedRooted attach_ktt_rooted(const RootedGraph& f, const Bipartition& parts, int t);

NeighborhoodHypergraph neighborhood_hypergraph(const BipartiteTemplate& h);

/// Throws EmptyBlowup for m == 0.
BlowupHypergraph blowup(const Hypergraph& pattern, int m);

}  // namespace indturan
