#include "embeddings.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace indturan {

AuxiliaryColouring auxiliary_colouring(const Graph& g, const std::vector<VertexMap>& copies, const RootedGraph& f) {
  const auto non_roots = f.non_roots().to_vector();
  const auto roots = f.roots.to_vector();
  VertexSet claimed(g.order());
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto& c = copies[i];
    require(is_induced_copy(g, f.graph, c), ErrorCode::NotSemiInduced,
            "copy " + std::to_string(i) + " is not an induced copy of F");
    for (Vertex r : roots)
      require(c[r] == copies.front()[r], ErrorCode::NotSemiInduced, "copies disagree on the root set");
    for (Vertex v : non_roots) {
      require(!claimed.contains(c[v]), ErrorCode::NotSemiInduced,
              "copy " + std::to_string(i) + " shares a non-root vertex with an earlier copy");
      claimed.insert(c[v]);
    }
  }
  AuxiliaryColouring aux;
  aux.q = static_cast<int>(non_roots.size());
  const auto n = copies.size();
  aux.colour.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int colour = -1;
      for (std::size_t a = 0; a < non_roots.size() && colour < 0; ++a)
        for (std::size_t b = 0; b < non_roots.size() && colour < 0; ++b)
          if (g.adjacent(copies[i][non_roots[a]], copies[j][non_roots[b]]))
            colour = static_cast<int>(a) * aux.q + static_cast<int>(b);
      aux.colour[i][j] = aux.colour[j][i] = colour;
    }
  return aux;
}

namespace {

/// Lexicographically first k-set of [0, n) with every pair satisfying `linked`.
template <class Linked>
std::optional<std::vector<int>> first_clique(int n, int k, Linked&& linked) {
  std::vector<int> chosen;
  std::function<bool(int)> grow = [&](int from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = from; v <= n - (k - static_cast<int>(chosen.size())); ++v) {
      bool ok = true;
      for (int u : chosen) ok = ok && linked(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      if (grow(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (k < 0 || k > n) return std::nullopt;
  if (grow(0)) return chosen;
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, std::vector<int>>> monochromatic_clique(const AuxiliaryColouring& aux, int size) {
  const int n = static_cast<int>(aux.colour.size());
  for (int c = 0; c < aux.q * aux.q; ++c) {
    auto clique = first_clique(n, size, [&](int u, int v) {
      return aux.colour[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == c;
    });
    if (clique) return std::make_pair(c, std::move(*clique));
  }
  return std::nullopt;
}

ExtractionOutcome extract_induced_power(const Graph& g, const std::vector<VertexMap>& copies, const RootedGraph& f, int l,
                                        int s) {
  require(l >= 1, ErrorCode::InvalidArgument, "l must be positive");
  require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
  ExtractionOutcome out;
  out.auxiliary = auxiliary_colouring(g, copies, f);
  const auto& aux = out.auxiliary;
  const int n = static_cast<int>(copies.size());
  const auto non_roots = f.non_roots().to_vector();

  if (auto mono = monochromatic_clique(aux, 2 * s)) {
    out.monochromatic_clique_free = false;
    const auto [colour, clique] = *mono;
    const Vertex a = non_roots[static_cast<std::size_t>(colour / aux.q)];
    const Vertex b = non_roots[static_cast<std::size_t>(colour % aux.q)];
    KssWitness w{VertexSet(g.order()), VertexSet(g.order())};
    for (int k = 0; k < s; ++k) w.left.insert(copies[static_cast<std::size_t>(clique[static_cast<std::size_t>(k)])][a]);
    for (int k = s; k < 2 * s; ++k) w.right.insert(copies[static_cast<std::size_t>(clique[static_cast<std::size_t>(k)])][b]);
    bool complete = true;
    w.left.for_each([&](Vertex u) { complete = complete && w.right.is_subset_of(g.neighbors(u)); });
    if (complete) {
      out.outcome.trace.push_back({0, "kss", "monochromatic " + std::to_string(2 * s) + "-clique in colour (" +
                                                 std::to_string(colour / aux.q) + "," + std::to_string(colour % aux.q) +
                                                 ") gives K_{s,s} in the host"});
      out.kss = std::move(w);
    }
  } else {
    out.outcome.trace.push_back({0, "kss", "no monochromatic " + std::to_string(2 * s) + "-clique"});
  }

  auto independent = first_clique(n, l, [&](int u, int v) {
    return aux.colour[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < 0;
  });
  if (!independent) {
    out.outcome.trace.push_back({0, "independent-set", "no " + std::to_string(l) + " pairwise independent copies"});
    return out;
  }
  const auto power = rooted_power(f, l);
  VertexMap map;
  map.image.assign(static_cast<std::size_t>(power.graph.order()), -1);
  for (int k = 0; k < l; ++k)
    for (Vertex v = 0; v < f.graph.order(); ++v)
      map.image[static_cast<std::size_t>(power.copies[static_cast<std::size_t>(k)][v])] =
          copies[static_cast<std::size_t>((*independent)[static_cast<std::size_t>(k)])][v];
  if (!is_induced_copy(g, power.graph, map)) {
    out.outcome.trace.push_back({0, "verify", "assembled power failed the induced-copy check"});
    return out;
  }
  out.chosen = *independent;
  std::string chosen;
  for (int c : out.chosen) chosen += (chosen.empty() ? "" : ",") + std::to_string(c);
  out.outcome.trace.push_back({0, "independent-set", "copies [" + chosen + "]"});
  out.outcome.found = true;
  out.outcome.map = std::move(map);
  return out;
}

// ---------------------------------------------------------------- random hosts

bool kss_through_edge(const Graph& g, Vertex u, Vertex v, int s) {
  if (s <= 1) return true;
  // Right side {v} + R', R' in N(u); left side {u} + L', L' in N(v) n N*(R').
  const auto pool = (g.neighbors(u) - VertexSet(g.order(), {v})).to_vector();
  VertexSet start = g.neighbors(v);
  start.erase(u);
  std::function<bool(std::size_t, int, const VertexSet&)> grow = [&](std::size_t from, int need, const VertexSet& left) {
    if (left.count() < s - 1) return false;
    if (need == 0) return true;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
      VertexSet next = left & g.neighbors(pool[i]);
      next.erase(pool[i]);
      if (grow(i + 1, need - 1, next)) return true;
    }
    return false;
  };
  // Left members must also avoid the right side; N*(R') already excludes R'
  // (no loops) and v is not a neighbour of itself.
  return grow(0, s - 1, start);
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  constexpr std::uint64_t kScale = std::uint64_t{1} << 53;
  return static_cast<double>(uniform_below(rng, kScale)) < p * static_cast<double>(kScale);
}

void shuffle(std::vector<Edge>& pairs, std::mt19937_64& rng) {
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[uniform_below(rng, i)]);
}

Graph greedy_fill(int n, std::vector<Edge> pairs, int s, std::uint64_t seed, double keep) {
  require(n >= 0 && s >= 1, ErrorCode::InvalidArgument, "need n >= 0 and s >= 1");
  std::mt19937_64 rng(seed);
  shuffle(pairs, rng);
  Graph g(n);
  for (const auto& [u, v] : pairs) {
    if (!coin(rng, keep)) continue;
    g.add_edge(u, v);
    if (kss_through_edge(g, u, v, s)) g.remove_edge(u, v);
  }
  return g;
}

}  // namespace

Graph random_kss_free(int n, int s, std::uint64_t seed, double keep_probability) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return greedy_fill(n, std::move(pairs), s, seed, keep_probability);
}

Graph random_bipartite_kss_free(int m, int s, std::uint64_t seed, double keep_probability) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < 2 * m; ++v) pairs.emplace_back(u, v);
  return greedy_fill(2 * m, std::move(pairs), s, seed, keep_probability);
}

}  // namespace indturan
