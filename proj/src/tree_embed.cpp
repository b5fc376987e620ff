#include "embeddings.hpp"

#include "error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace indturan {

void validate_subgraph(const Graph& g, const HostSubgraph& l) {
  require(l.edges.order() == g.order(), ErrorCode::InvalidArgument, "subgraph must use host vertex ids");
  require(l.vertices.is_subset_of(g.vertices()), ErrorCode::InvalidArgument, "subgraph vertex out of range");
  for (const auto& [u, v] : l.edges.edges()) {
    require(l.vertices.contains(u) && l.vertices.contains(v), ErrorCode::InvalidArgument,
            "subgraph edge leaves its vertex set");
    require(g.adjacent(u, v), ErrorCode::InvalidArgument, "subgraph edge missing from host");
  }
}

HostSubgraph whole(const Graph& g) { return {g.vertices(), g}; }

std::vector<std::pair<Vertex, Vertex>> leaf_extension_order(const Graph& tree) {
  const int t = tree.order();
  require(t >= 1 && tree.size() == t - 1, ErrorCode::InvalidArgument, "not a tree");
  std::vector<std::pair<Vertex, Vertex>> order{{0, -1}};
  VertexSet seen(t, {0});
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex u = order[i].first;
    tree.neighbors(u).for_each([&](Vertex w) {
      if (seen.contains(w)) return;
      seen.insert(w);
      order.emplace_back(w, u);
    });
  }
  require(static_cast<int>(order.size()) == t, ErrorCode::InvalidArgument, "not a tree (disconnected)");
  return order;
}

VertexSet tree_bad_set(const Graph& g, const HostSubgraph& l, Vertex x, int d, int t) {
  VertexSet out(g.order());
  const auto& nl = l.edges.neighbors(x);
  l.vertices.for_each([&](Vertex y) {
    if (4 * t * g.neighbors(y).intersection_count(nl) >= d) out.insert(y);
  });
  return out;
}

namespace {

class TreeEmbedder {
 public:
  TreeEmbedder(const Graph& g, const HostSubgraph& l, const Graph& tree, int d, const std::function<bool(const VertexMap&)>& visit)
      : g_(g), l_(l), d_(d), t_(tree.order()), visit_(visit), order_(leaf_extension_order(tree)),
        bad_(static_cast<std::size_t>(g.order())) {
    map_.image.assign(static_cast<std::size_t>(t_), -1);
  }

  void run() {
    bool go = true;
    l_.vertices.for_each([&](Vertex x) {
      if (!go) return;
      VertexSet used(g_.order(), {x});
      map_.image[static_cast<std::size_t>(order_[0].first)] = x;
      go = extend(1, used, bad(x));
    });
  }

 private:
  const VertexSet& bad(Vertex x) {
    auto& slot = bad_[static_cast<std::size_t>(x)];
    if (!slot) slot = tree_bad_set(g_, l_, x, d_, t_);
    return *slot;
  }

  bool extend(std::size_t i, VertexSet& used, const VertexSet& bad_union) {
    if (i == order_.size()) return visit_(map_);
    const auto [v, u] = order_[i];
    const Vertex anchor = map_[u];
    // Gamma(S) = N_L(u') minus the G-neighbourhoods of the other copy vertices,
    // the bad sets of all copy vertices, and the copy itself.
    VertexSet gamma = l_.edges.neighbors(anchor) - bad_union - used;
    used.for_each([&](Vertex x) {
      if (x != anchor) gamma -= g_.neighbors(x);
    });
    bool go = true;
    gamma.for_each([&](Vertex y) {
      if (!go || bad(y).intersects(used)) return;
      map_.image[static_cast<std::size_t>(v)] = y;
      used.insert(y);
      go = extend(i + 1, used, bad_union | bad(y));
      used.erase(y);
    });
    map_.image[static_cast<std::size_t>(v)] = -1;
    return go;
  }

  const Graph& g_;
  const HostSubgraph& l_;
  int d_;
  int t_;
  const std::function<bool(const VertexMap&)>& visit_;
  std::vector<std::pair<Vertex, Vertex>> order_;
  std::vector<std::optional<VertexSet>> bad_;
  VertexMap map_;
};

}  // namespace

void greedy_tree_embed(const Host& host, const HostSubgraph& l, const Graph& tree, int d,
                       const std::function<bool(const VertexMap&)>& visit) {
  validate_subgraph(host.graph, l);
  TreeEmbedder(host.graph, l, tree, d, visit).run();
}

TreeEmbedReport greedy_tree_embed(const Host& host, const HostSubgraph& l, const Graph& tree, int d) {
  TreeEmbedReport report;
  greedy_tree_embed(host, l, tree, d, [&](const VertexMap& m) {
    report.copies.push_back(m);
    return true;
  });
  const int t = tree.order();
  const int n = l.vertices.count();
  report.guaranteed = Rational(n) * pow(Rational(d, 2), static_cast<unsigned>(t - 1));
  int lo = -1;
  int hi = 0;
  l.vertices.for_each([&](Vertex v) {
    const int deg = l.edges.degree(v);
    lo = lo < 0 ? deg : std::min(lo, deg);
    hi = std::max(hi, deg);
  });
  if (lo > 0 && lo >= d) {
    const Rational k(hi, lo);
    const Rational need = Rational(host.s * t * t) * pow(Rational(2), static_cast<unsigned>(t + 6)) *
                          pow(k, static_cast<unsigned>(t - 1));
    report.hypothesis_holds = Rational(d) >= need;
  }
  return report;
}

bool is_admissible(const VertexMap& copy, const Graph& tree, const Graph& l, int p, const BigInt& threshold) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be positive");
  for (Vertex v = 0; v < tree.order(); ++v) {
    const auto nbrs = tree.neighbors(v).to_vector();
    if (static_cast<int>(nbrs.size()) < p) continue;
    std::vector<bool> pick(nbrs.size(), false);
    std::fill(pick.begin(), pick.begin() + p, true);
    do {
      VertexSet leaves(l.order());
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (pick[i]) leaves.insert(copy[nbrs[i]]);
      if (heavy_star_classify(l, leaves, threshold)) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return true;
}

bool heavy_star_classify(const Graph& l, const VertexSet& leaves, const BigInt& threshold) {
  return BigInt(common_neighborhood(l, leaves).count()) >= threshold;
}

StarCount heavy_star_count(const Graph& l, int p, const BigInt& threshold) {
  require(p >= 1, ErrorCode::InvalidArgument, "p must be positive");
  StarCount out;
  for (Vertex v = 0; v < l.order(); ++v) {
    const auto nbrs = l.neighbors(v).to_vector();
    if (static_cast<int>(nbrs.size()) < p) continue;
    std::vector<bool> pick(nbrs.size(), false);
    std::fill(pick.begin(), pick.begin() + p, true);
    do {
      VertexSet leaves(l.order());
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (pick[i]) leaves.insert(nbrs[i]);
      ++out.stars;
      if (heavy_star_classify(l, leaves, threshold)) ++out.heavy;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

bool heavy_path_classify(const Graph& l, Vertex x, Vertex y, Vertex z, const BigInt& threshold) {
  const auto in = [&](Vertex v) { return v >= 0 && v < l.order(); };
  require(in(x) && in(y) && in(z) && x != z && l.adjacent(x, y) && l.adjacent(y, z), ErrorCode::InvalidArgument,
          "xyz is not a path in L");
  return BigInt(common_neighborhood(l, VertexSet(l.order(), {x, z})).count()) >= threshold;
}

PathCount heavy_path_count(const Graph& l, const BigInt& threshold) {
  PathCount out;
  for (Vertex y = 0; y < l.order(); ++y) {
    const auto nbrs = l.neighbors(y).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        ++out.paths;
        if (heavy_path_classify(l, nbrs[i], y, nbrs[j], threshold)) ++out.heavy;
      }
  }
  return out;
}

}  // namespace indturan
