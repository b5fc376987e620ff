#pragma once

// Shared test fixtures. The brute-force helpers below only read adjacency
// bits and never call the search code they are used to check.

#include "embeddings.hpp"
#include "fuzz.hpp"
#include "realizability.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

namespace fx {

using namespace indturan;

inline Graph graph_of(int n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<double>(uniform_below(rng, 1000)) < p * 1000.0) g.add_edge(i, j);
  return g;
}

/// Parts (A, B) taken from the proper 2-colouring of a connected bipartite graph.
inline BipartiteTemplate coloured_template(const Graph& g) {
  const auto parts = two_colouring(g);
  return make_template(g, parts->x, parts->y);
}

/// uv in E(h) <=> map(u)map(v) in E(g), written out pair by pair.
inline bool induced_by_definition(const Graph& g, const Graph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != h.order()) return false;
  for (int u = 0; u < h.order(); ++u) {
    if (map[u] < 0 || map[u] >= g.order()) return false;
    for (int v = u + 1; v < h.order(); ++v) {
      if (map[u] == map[v]) return false;
      if (h.adjacent(u, v) != g.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

/// Every injective tuple of host vertices, filtered by the definition.
inline std::set<VertexMap> brute_induced_maps(const Graph& g, const Graph& h) {
  std::set<VertexMap> out;
  VertexMap map;
  map.image.assign(static_cast<std::size_t>(h.order()), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::function<void(int)> go = [&](int i) {
    if (i == h.order()) {
      if (induced_by_definition(g, h, map)) out.insert(map);
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      map.image[static_cast<std::size_t>(i)] = v;
      go(i + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  go(0);
  return out;
}

/// Some vertex subset of size |h| under some ordering induces h.
inline bool brute_has_induced(const Graph& g, const Graph& h) {
  const int k = h.order();
  if (k > g.order()) return false;
  std::vector<int> pick(static_cast<std::size_t>(g.order()), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> chosen;
    for (int v = 0; v < g.order(); ++v)
      if (pick[static_cast<std::size_t>(v)]) chosen.push_back(v);
    do {
      if (induced_by_definition(g, h, VertexMap{chosen})) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// h as a (not necessarily induced) subgraph, by the same enumeration.
inline bool brute_has_subgraph(const Graph& g, const Graph& h) {
  const int k = h.order();
  if (k > g.order()) return false;
  std::vector<int> pick(static_cast<std::size_t>(g.order()), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> chosen;
    for (int v = 0; v < g.order(); ++v)
      if (pick[static_cast<std::size_t>(v)]) chosen.push_back(v);
    do {
      bool ok = true;
      for (const auto& [u, v] : h.edges()) ok = ok && g.adjacent(chosen[static_cast<std::size_t>(u)], chosen[static_cast<std::size_t>(v)]);
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// K_{s,s}: an s-set whose common neighbourhood has at least s vertices.
inline bool brute_has_kss(const Graph& g, int s) {
  const int n = g.order();
  if (2 * s > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - s, pick.end(), 1);
  do {
    int common = 0;
    for (int v = 0; v < n; ++v) {
      bool all = true;
      for (int u = 0; u < n && all; ++u)
        if (pick[static_cast<std::size_t>(u)]) all = g.adjacent(u, v);
      common += all ? 1 : 0;
    }
    if (common >= s) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// All labelled graphs on n vertices, n <= 6.
inline void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    visit(g);
  }
}

inline int brute_ex_star(int n, const Graph& h, int s) {
  int best = 0;
  for_each_labelled_graph(n, [&](const Graph& g) {
    if (g.size() > best && !brute_has_kss(g, s) && !brute_has_induced(g, h)) best = g.size();
  });
  return best;
}

inline int brute_ex_plain(int n, const Graph& h) {
  int best = 0;
  for_each_labelled_graph(n, [&](const Graph& g) {
    if (g.size() > best && !brute_has_subgraph(g, h)) best = g.size();
  });
  return best;
}

/// Good labelled copies of a tree: tree edges in L, induced in G, and no copy
/// vertex in the bad set {y in V(L) : |N_G(y) n N_L(x)| >= d/(4t)} of another.
inline std::set<VertexMap> brute_good_tree_copies(const Graph& g, const VertexSet& l_vertices, const Graph& l_edges,
                                                  const Graph& tree, int d) {
  const int t = tree.order();
  const auto in_bad = [&](Vertex x, Vertex y) {
    int common = 0;
    for (int w = 0; w < g.order(); ++w) common += (g.adjacent(y, w) && l_edges.adjacent(x, w)) ? 1 : 0;
    return l_vertices.contains(y) && 4 * t * common >= d;
  };
  std::set<VertexMap> out;
  for (const auto& map : brute_induced_maps(g, tree)) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) ok = l_vertices.contains(map[i]);
    for (const auto& [u, v] : tree.edges()) ok = ok && l_edges.adjacent(map[u], map[v]);
    for (int i = 0; i < t && ok; ++i)
      for (int j = 0; j < t && ok; ++j)
        if (i != j) ok = !in_bad(map[i], map[j]);
    if (ok) out.insert(map);
  }
  return out;
}

inline std::set<VertexMap> emitted_tree_copies(const Host& host, const HostSubgraph& l, const Graph& tree, int d,
                                               bool* duplicates = nullptr) {
  std::set<VertexMap> out;
  bool dup = false;
  greedy_tree_embed(host, l, tree, d, [&](const VertexMap& m) {
    dup = !out.insert(m).second || dup;
    return true;
  });
  if (duplicates != nullptr) *duplicates = dup;
  return out;
}

/// A host built around an m-blowup of F_A(H): X is the disjoint union of the
/// parts S_v (v in A), and every (b, transversal of the parts of N(b)) gets
/// `width` private vertices in Y adjacent to exactly that transversal. No edges
/// inside X or Y, so G = L = the cross graph.
struct PlantedBlowup {
  Host host;
  Graph l;
  BipartiteTemplate h;
  KeyLemmaInput input;
  std::vector<VertexSet> rich;  // every transversal of every hyperedge, in order
  Thresholds th;
};

inline PlantedBlowup planted_blowup(const BipartiteTemplate& h, int m, int width, int padding = 0) {
  PlantedBlowup out;
  out.h = h;
  const auto a = h.a.to_vector();
  const int x_count = static_cast<int>(a.size()) * m;
  std::vector<std::vector<Vertex>> parts(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < m; ++k) parts[i].push_back(static_cast<int>(i) * m + k);
  std::vector<std::vector<Vertex>> transversals;
  h.b.for_each([&](Vertex b) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (h.graph.adjacent(a[i], b)) members.push_back(i);
    std::vector<int> pos(members.size(), 0);
    while (true) {
      std::vector<Vertex> t;
      for (std::size_t k = 0; k < members.size(); ++k) t.push_back(parts[members[k]][static_cast<std::size_t>(pos[k])]);
      transversals.push_back(t);
      std::size_t k = members.size();
      while (k > 0 && ++pos[k - 1] == m) pos[--k] = 0;
      if (k == 0) break;
    }
  });
  const int n = x_count + static_cast<int>(transversals.size()) * width + padding;
  Graph g(n);
  Vertex next = x_count;
  for (const auto& t : transversals) {
    for (int w = 0; w < width; ++w, ++next)
      for (Vertex x : t) g.add_edge(x, next);
    out.rich.push_back(VertexSet::of(n, t));
  }
  out.host.graph = g;
  VertexSet x(n);
  for (Vertex v = 0; v < x_count; ++v) x.insert(v);
  out.host.partition = Bipartition{x, VertexSet::full(n) - x};
  out.l = g;
  for (const auto& p : parts) out.input.parts.push_back(VertexSet::of(n, p));
  out.th.c_hs = width;
  out.th.retries = 8;
  return out;
}

/// Five copies of rooted_path(2) on shared roots 0 and 1 with middles 2..6;
/// the middles of copies 0, 1, 2 form a triangle.
struct PlantedPower {
  Graph g;
  RootedGraph f;
  std::vector<VertexMap> copies;
};

inline PlantedPower planted_power() {
  PlantedPower out;
  out.f = rooted_path(2);
  out.g = Graph(7);
  for (int c = 0; c < 5; ++c) {
    out.g.add_edge(0, 2 + c);
    out.g.add_edge(1, 2 + c);
    out.copies.push_back(VertexMap{{0, 1, 2 + c}});
  }
  out.g.add_edge(2, 3);
  out.g.add_edge(3, 4);
  out.g.add_edge(2, 4);
  return out;
}

/// Rooted constructor corpus: every non-root count stays small enough for the
/// exhaustive balancedness check.
inline std::vector<RootedGraph> rooted_corpus() {
  std::vector<RootedGraph> out;
  for (int r = 1; r <= 4; ++r)
    for (int t = 1; t <= 3; ++t) out.push_back(height_two_tree(r, t));
  for (int r = 1; r <= 4; ++r) out.push_back(tree_r11(r));
  for (int len = 2; len <= 6; ++len) out.push_back(rooted_path(len));
  for (int r = 1; r <= 3; ++r) out.push_back(rooted_star(r));
  out.push_back(rooted_power(rooted_path(3), 2));
  out.push_back(rooted_power(height_two_tree(2, 1), 2));
  return out;
}

}  // namespace fx
