#pragma once

#include "families.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace indturan {

/// Two disjoint s-sets with every cross pair adjacent.
struct KssWitness {
  VertexSet left;
  VertexSet right;
};

/// K_{s,s} as a (not necessarily induced) subgraph. s = 0 is vacuous (empty witness).
std::optional<KssWitness> contains_kss(const Graph& g, int s);

struct MatchOptions {
  /// Require non-edges of the pattern to map to non-edges.
  bool induced = true;
  /// Optional per-pattern-vertex candidate sets; empty means unrestricted.
  std::vector<VertexSet> domains;
};

/// Calls visit for every injective map of h into g satisfying options, until
/// visit returns false. Maps are produced in a fixed deterministic order.
void for_each_embedding(const Graph& g, const Graph& h, const MatchOptions& options,
                        const std::function<bool(const VertexMap&)>& visit);

std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h);
std::optional<VertexMap> contains_subgraph(const Graph& g, const Graph& h);

/// Checks a map by the definition alone: injective, in range, and
/// uv in E(h) <=> map(u)map(v) in E(g) for every pair.
bool is_induced_copy(const Graph& g, const Graph& h, const VertexMap& map);

bool are_isomorphic(const Graph& a, const Graph& b);

/**
 * A copy of the template in G[X,Y] (A on one side, B on the other, either
 * orientation) that is induced in the whole of G. Throws NoPartition when the
 * host has no partition.
 */
std::optional<VertexMap> contains_bip_induced(const Host& host, const BipartiteTemplate& h);

/// Definition-level check behind contains_bip_induced.
bool is_bip_induced_copy(const Host& host, const BipartiteTemplate& h, const VertexMap& map);

struct ExtremalResult {
  int value = 0;
  /// For ex*_bip this is the full graph G; value counts the cross edges only.
  Graph witness;
  std::optional<Bipartition> partition;
  std::int64_t explored = 0;
};

struct ExtremalOptions {
  int max_n = 8;
  int threads = 1;
};

/// ex*(n, h, s) by orderly generation of K_{s,s}-free, induced-h-free graphs.
/// Throws TooLarge for n > options.max_n.
ExtremalResult extremal_star(int n, const Graph& h, int s, const ExtremalOptions& options = {});

/// Companion ex(n, h): no (not necessarily induced) copy of h.
ExtremalResult extremal_plain(int n, const Graph& h, const ExtremalOptions& options = {});

/// ex*_bip(n, h, s): the largest e(G[X,Y]) over K_{s,s}-free G and partitions
/// (X, Y) with no copy of h in G[X,Y] induced in G. Default budget n <= 7.
ExtremalResult extremal_bip_star(int n, const BipartiteTemplate& h, int s, const ExtremalOptions& options = {7, 1});

/**
 * Kovari-Sos-Turan for the cross graph of a balanced bipartite host:
 * e <= (s-1)^{1/s} m^{2-1/s} + (s-1) m, compared exactly as
 * (e - (s-1)m)^s <= (s-1) m^{2s-1}. Throws NoPartition / InvalidArgument for
 * unequal sides, NotKssFree when the cross graph contains K_{s,s}.
 */
bool kst_check(const Host& host);

/// Canonical-form test used by the orderly generator: the column-wise upper
/// triangle of the adjacency matrix is lexicographically maximal over all
/// relabellings. Exposed for tests.
bool is_orderly_canonical(const Graph& g);

}  // namespace indturan
