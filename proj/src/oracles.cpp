#include "oracles.hpp"

#include "error.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <string>
#include <thread>

namespace indturan {

// ---------------------------------------------------------------- K_{s,s}

namespace {

bool extend_kss(const Graph& g, int s, VertexSet& left, const VertexSet& common, Vertex from, KssWitness& out) {
  if (left.count() == s) {
    if (common.count() < s) return false;
    out.left = left;
    out.right = VertexSet(g.order());
    int taken = 0;
    common.for_each([&](Vertex v) {
      if (taken++ < s) out.right.insert(v);
    });
    return true;
  }
  for (Vertex v = from; v < g.order(); ++v) {
    if (left.contains(v)) continue;
    VertexSet next = common & g.neighbors(v);
    if (next.count() < s) continue;
    left.insert(v);
    if (extend_kss(g, s, left, next, v + 1, out)) return true;
    left.erase(v);
  }
  return false;
}

}  // namespace

std::optional<KssWitness> contains_kss(const Graph& g, int s) {
  require(s >= 0, ErrorCode::InvalidArgument, "s must be non-negative");
  if (s == 0) return KssWitness{VertexSet(g.order()), VertexSet(g.order())};
  if (2 * s > g.order()) return std::nullopt;
  KssWitness out;
  VertexSet left(g.order());
  if (extend_kss(g, s, left, g.vertices(), 0, out)) return out;
  return std::nullopt;
}

// ---------------------------------------------------------------- matching

namespace {

// Connected-first order: each next vertex has the most already-placed
// neighbours, ties broken by degree then id.
std::vector<Vertex> match_order(const Graph& h) {
  std::vector<Vertex> order;
  std::vector<bool> placed(static_cast<std::size_t>(h.order()), false);
  for (int step = 0; step < h.order(); ++step) {
    Vertex best = -1;
    int best_links = -1, best_degree = -1;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (Vertex u : order) links += h.adjacent(u, v) ? 1 : 0;
      if (links > best_links || (links == best_links && h.degree(v) > best_degree)) {
        best = v;
        best_links = links;
        best_degree = h.degree(v);
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, const MatchOptions& options, const std::function<bool(const VertexMap&)>& visit)
      : g_(g), h_(h), options_(options), visit_(visit), order_(match_order(h)) {
    map_.image.assign(static_cast<std::size_t>(h.order()), -1);
  }

  void run() {
    if (h_.order() > g_.order()) return;
    VertexSet used(g_.order());
    descend(0, used);
  }

 private:
  bool descend(std::size_t depth, VertexSet& used) {
    if (depth == order_.size()) return visit_(map_);
    const Vertex p = order_[depth];
    VertexSet candidates = options_.domains.empty() || options_.domains[static_cast<std::size_t>(p)].universe() == 0
                               ? g_.vertices()
                               : options_.domains[static_cast<std::size_t>(p)];
    candidates -= used;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex q = order_[j];
      if (h_.adjacent(p, q))
        candidates &= g_.neighbors(map_[q]);
      else if (options_.induced)
        candidates -= g_.neighbors(map_[q]);
    }
    const int need = h_.degree(p);
    bool keep_going = true;
    candidates.for_each([&](Vertex c) {
      if (!keep_going || g_.degree(c) < need) return;
      map_.image[static_cast<std::size_t>(p)] = c;
      used.insert(c);
      keep_going = descend(depth + 1, used);
      used.erase(c);
    });
    map_.image[static_cast<std::size_t>(p)] = -1;
    return keep_going;
  }

  const Graph& g_;
  const Graph& h_;
  const MatchOptions& options_;
  const std::function<bool(const VertexMap&)>& visit_;
  std::vector<Vertex> order_;
  VertexMap map_;
};

std::optional<VertexMap> first_embedding(const Graph& g, const Graph& h, const MatchOptions& options) {
  std::optional<VertexMap> found;
  for_each_embedding(g, h, options, [&](const VertexMap& m) {
    found = m;
    return false;
  });
  return found;
}

}  // namespace

void for_each_embedding(const Graph& g, const Graph& h, const MatchOptions& options,
                        const std::function<bool(const VertexMap&)>& visit) {
  Matcher(g, h, options, visit).run();
}

std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h) { return first_embedding(g, h, {true, {}}); }

std::optional<VertexMap> contains_subgraph(const Graph& g, const Graph& h) { return first_embedding(g, h, {false, {}}); }

bool is_induced_copy(const Graph& g, const Graph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != h.order() || !map.injective()) return false;
  for (Vertex u = 0; u < h.order(); ++u) {
    if (map[u] < 0 || map[u] >= g.order()) return false;
    for (Vertex v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v) != g.adjacent(map[u], map[v])) return false;
  }
  return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && contains_induced(a, b).has_value();
}

std::optional<VertexMap> contains_bip_induced(const Host& host, const BipartiteTemplate& h) {
  require(host.partition.has_value(), ErrorCode::NoPartition, "host has no bipartition");
  const auto& p = *host.partition;
  for (int orientation = 0; orientation < 2; ++orientation) {
    const VertexSet& a_side = orientation == 0 ? p.x : p.y;
    const VertexSet& b_side = orientation == 0 ? p.y : p.x;
    MatchOptions options{true, std::vector<VertexSet>(static_cast<std::size_t>(h.h()))};
    for (Vertex v = 0; v < h.h(); ++v) options.domains[static_cast<std::size_t>(v)] = h.a.contains(v) ? a_side : b_side;
    bool empty_domain = false;
    for (const auto& d : options.domains) empty_domain = empty_domain || d.empty();
    if (empty_domain) continue;
    if (auto m = first_embedding(host.graph, h.graph, options)) return m;
  }
  return std::nullopt;
}

bool is_bip_induced_copy(const Host& host, const BipartiteTemplate& h, const VertexMap& map) {
  if (!host.partition || !is_induced_copy(host.graph, h.graph, map)) return false;
  const auto& p = *host.partition;
  for (int orientation = 0; orientation < 2; ++orientation) {
    const VertexSet& a_side = orientation == 0 ? p.x : p.y;
    const VertexSet& b_side = orientation == 0 ? p.y : p.x;
    bool ok = true;
    for (Vertex v = 0; v < h.h(); ++v) ok = ok && (h.a.contains(v) ? a_side : b_side).contains(map[v]);
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------- orderly generation

namespace {

constexpr int kMaxOrderly = 16;
using Rows = std::array<std::uint32_t, kMaxOrderly>;

Rows rows_of(const Graph& g) {
  Rows rows{};
  for (const auto& [u, v] : g.edges()) {
    rows[static_cast<std::size_t>(u)] |= 1U << v;
    rows[static_cast<std::size_t>(v)] |= 1U << u;
  }
  return rows;
}

bool bit(const Rows& rows, int i, int j) { return (rows[static_cast<std::size_t>(i)] >> j) & 1U; }

// Searches for a relabelling whose code beats the identity. perm[p] is the
// original vertex placed at position p.
bool beaten(const Rows& rows, int k, std::array<int, kMaxOrderly>& perm, std::uint32_t used, int pos) {
  if (pos == k) return false;
  for (int v = 0; v < k; ++v) {
    if ((used >> v) & 1U) continue;
    perm[static_cast<std::size_t>(pos)] = v;
    int cmp = 0;
    for (int i = 0; i < pos && cmp == 0; ++i) {
      const bool mine = bit(rows, perm[static_cast<std::size_t>(i)], v);
      const bool orig = bit(rows, i, pos);
      if (mine != orig) cmp = mine ? 1 : -1;
    }
    if (cmp > 0) return true;
    if (cmp == 0 && beaten(rows, k, perm, used | (1U << v), pos + 1)) return true;
  }
  return false;
}

bool canonical_rows(const Rows& rows, int k) {
  std::array<int, kMaxOrderly> perm{};
  return !beaten(rows, k, perm, 0, 0);
}

Graph extend(const Graph& g, std::uint32_t neighbourhood) {
  Graph out(g.order() + 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (Vertex u = 0; u < g.order(); ++u)
    if ((neighbourhood >> u) & 1U) out.add_edge(u, g.order());
  return out;
}

using Hereditary = std::function<bool(const Graph&)>;

// Canonical children of a canonical graph that satisfy the hereditary property.
std::vector<Graph> children(const Graph& g, const Hereditary& feasible) {
  std::vector<Graph> out;
  const int k = g.order();
  for (std::uint32_t nb = 0; nb < (1U << k); ++nb) {
    Graph child = extend(g, nb);
    if (!canonical_rows(rows_of(child), k + 1)) continue;
    if (!feasible(child)) continue;
    out.push_back(std::move(child));
  }
  return out;
}

bool edges_less(const Graph& a, const Graph& b) { return a.edges() < b.edges(); }

/// Worker-local incumbent; merged deterministically after the parallel phase.
struct Incumbent {
  int value = -1;
  Graph witness;
  std::optional<Bipartition> partition;
  std::int64_t explored = 0;

  void offer(int v, const Graph& g, const std::optional<Bipartition>& p) {
    if (v > value || (v == value && better_tie(g, p))) {
      value = v;
      witness = g;
      partition = p;
    }
  }
  bool better_tie(const Graph& g, const std::optional<Bipartition>& p) const {
    if (edges_less(g, witness)) return true;
    if (edges_less(witness, g)) return false;
    if (p && partition) return lex_less(p->x, partition->x);
    return false;
  }
};

using Scorer = std::function<void(const Graph&, Incumbent&)>;

struct OrderlySearch {
  int n;
  Hereditary feasible;
  Scorer score_leaf;
  // Largest score any n-vertex descendant of g could reach.
  std::function<int(const Graph&)> bound;

  void dfs(const Graph& g, Incumbent& inc) const {
    ++inc.explored;
    if (g.order() == n) {
      score_leaf(g, inc);
      return;
    }
    if (bound(g) < inc.value) return;
    for (const auto& child : children(g, feasible)) dfs(child, inc);
  }

  ExtremalResult run(int threads) const {
    // Breadth-first down to a frontier, then split the frontier across workers.
    std::vector<Graph> frontier{Graph(0)};
    std::int64_t explored_above = 0;
    const int split_level = std::min(n, 4);
    for (int level = 0; level < split_level; ++level) {
      std::vector<Graph> next;
      for (const auto& g : frontier) {
        ++explored_above;
        for (auto& c : children(g, feasible)) next.push_back(std::move(c));
      }
      frontier = std::move(next);
    }
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    std::vector<Incumbent> incumbents(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
      try {
        for (std::size_t i = w; i < frontier.size(); i += workers) dfs(frontier[i], incumbents[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);

    Incumbent merged;
    merged.explored = explored_above;
    for (const auto& inc : incumbents) {
      merged.explored += inc.explored;
      if (inc.value >= 0) merged.offer(inc.value, inc.witness, inc.partition);
    }
    ExtremalResult result;
    result.value = std::max(merged.value, 0);
    result.witness = merged.value >= 0 ? merged.witness : Graph(n);
    result.partition = merged.partition;
    result.explored = merged.explored;
    return result;
  }
};

int complete_bound(const Graph& g, int n) {
  int extra = 0;
  for (int j = g.order(); j < n; ++j) extra += j;
  return g.size() + extra;
}

void check_budget(int n, const ExtremalOptions& options) {
  require(n >= 0, ErrorCode::InvalidArgument, "n must be non-negative");
  require(n <= options.max_n && n <= kMaxOrderly, ErrorCode::TooLarge,
          "n = " + std::to_string(n) + " exceeds the search budget of " + std::to_string(options.max_n));
}

bool has_induced_through_last(const Graph& g, const Graph& h, bool induced) {
  if (h.order() == 0) return true;
  if (h.order() > g.order()) return false;
  const Vertex last = g.order() - 1;
  for (Vertex p = 0; p < h.order(); ++p) {
    MatchOptions options{induced, std::vector<VertexSet>(static_cast<std::size_t>(h.order()), g.vertices() - VertexSet(g.order(), {last}))};
    options.domains[static_cast<std::size_t>(p)] = VertexSet(g.order(), {last});
    if (first_embedding(g, h, options)) return true;
  }
  return false;
}

}  // namespace

bool is_orderly_canonical(const Graph& g) {
  require(g.order() <= kMaxOrderly, ErrorCode::TooLarge, "canonical test supports at most 16 vertices");
  return canonical_rows(rows_of(g), g.order());
}

ExtremalResult extremal_star(int n, const Graph& h, int s, const ExtremalOptions& options) {
  check_budget(n, options);
  require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
  OrderlySearch search{
      n,
      [&](const Graph& g) {
        if (g.order() == 0) return true;
        // Parent was feasible, so any bad copy must use the new vertex.
        return !contains_kss(g, s).has_value() && !has_induced_through_last(g, h, true);
      },
      [](const Graph& g, Incumbent& inc) { inc.offer(g.size(), g, std::nullopt); },
      [n](const Graph& g) { return complete_bound(g, n); }};
  return search.run(options.threads);
}

ExtremalResult extremal_plain(int n, const Graph& h, const ExtremalOptions& options) {
  check_budget(n, options);
  OrderlySearch search{
      n,
      [&](const Graph& g) { return g.order() == 0 || !has_induced_through_last(g, h, false); },
      [](const Graph& g, Incumbent& inc) { inc.offer(g.size(), g, std::nullopt); },
      [n](const Graph& g) { return complete_bound(g, n); }};
  return search.run(options.threads);
}

ExtremalResult extremal_bip_star(int n, const BipartiteTemplate& h, int s, const ExtremalOptions& options) {
  check_budget(n, options);
  require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
  OrderlySearch search{
      n,
      [&](const Graph& g) { return g.order() == 0 || !contains_kss(g, s).has_value(); },
      [&](const Graph& g, Incumbent& inc) {
        if (n == 0) {
          inc.offer(0, g, Bipartition{});
          return;
        }
        // Partitions up to swapping X and Y: vertex 0 always in X.
        for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
          Bipartition p{VertexSet(n, {0}), VertexSet(n)};
          for (int v = 1; v < n; ++v) ((mask >> (v - 1)) & 1U ? p.y : p.x).insert(v);
          const int cross = cross_edges(g, p).size();
          if (cross < inc.value) continue;
          const Host host{g, p, s};
          if (contains_bip_induced(host, h)) continue;
          inc.offer(cross, g, p);
        }
      },
      [n](const Graph& g) { return complete_bound(g, n); }};
  return search.run(options.threads);
}

bool kst_check(const Host& host) {
  require(host.partition.has_value(), ErrorCode::NoPartition, "KST check needs a bipartition");
  const auto& p = *host.partition;
  const int m = p.x.count();
  require(m == p.y.count(), ErrorCode::InvalidArgument, "KST check needs equal sides");
  require(host.s >= 1, ErrorCode::InvalidArgument, "s must be positive");
  const Graph cross = cross_edges(host.graph, p);
  require(!contains_kss(cross, host.s).has_value(), ErrorCode::NotKssFree,
          "cross graph contains K_{" + std::to_string(host.s) + "," + std::to_string(host.s) + "}");
  const BigInt surplus = BigInt(cross.size()) - BigInt(host.s - 1) * m;
  if (surplus <= 0) return true;
  const BigInt lhs = boost::multiprecision::pow(surplus, static_cast<unsigned>(host.s));
  const BigInt rhs = BigInt(host.s - 1) * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(2 * host.s - 1));
  return lhs <= rhs;
}

}  // namespace indturan
