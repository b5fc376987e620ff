#include "embeddings.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace indturan {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  require(bound > 0, ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

// ---------------------------------------------------------------- Hall

namespace {

class Matching {
 public:
  Matching(const std::vector<std::vector<Vertex>>& adj, int right) : adj_(adj), owner_(static_cast<std::size_t>(right), -1) {}

  bool augment(int left) {
    seen_.assign(owner_.size(), false);
    return try_left(left);
  }

  const std::vector<int>& owner() const { return owner_; }

 private:
  bool try_left(int left) {
    for (Vertex r : adj_[static_cast<std::size_t>(left)]) {
      if (seen_[static_cast<std::size_t>(r)]) continue;
      seen_[static_cast<std::size_t>(r)] = true;
      const int prev = owner_[static_cast<std::size_t>(r)];
      if (prev < 0 || try_left(prev)) {
        owner_[static_cast<std::size_t>(r)] = left;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::vector<int> owner_;
  std::vector<bool> seen_;
};

}  // namespace

std::optional<std::vector<VertexSet>> hall_disjoint_sets(const std::vector<VertexSet>& sets, int t) {
  require(t >= 0, ErrorCode::InvalidArgument, "t must be non-negative");
  int universe = 0;
  for (const auto& s : sets) universe = std::max(universe, s.universe());
  std::vector<std::vector<Vertex>> adj;
  for (const auto& s : sets)
    for (int k = 0; k < t; ++k) adj.push_back(s.to_vector());
  Matching matching(adj, universe);
  for (int left = 0; left < static_cast<int>(adj.size()); ++left)
    if (!matching.augment(left)) return std::nullopt;
  std::vector<VertexSet> out(sets.size(), VertexSet(universe));
  for (Vertex r = 0; r < universe; ++r) {
    const int left = matching.owner()[static_cast<std::size_t>(r)];
    if (left >= 0) out[static_cast<std::size_t>(left / t)].insert(r);
  }
  return out;
}

// ---------------------------------------------------------------- key lemma

namespace {

std::string show(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    out << (first ? "" : ",") << v;
    first = false;
  });
  out << '}';
  return out.str();
}

std::string show(const std::vector<Vertex>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

void check_cross_subgraph(const Host& host, const Graph& l) {
  require(l.order() == host.graph.order(), ErrorCode::InvalidArgument, "L must use host vertex ids");
  const auto& p = *host.partition;
  for (const auto& [u, v] : l.edges()) {
    require(host.graph.adjacent(u, v), ErrorCode::InvalidArgument, "L edge missing from host");
    require(p.x.contains(u) != p.x.contains(v), ErrorCode::InvalidArgument, "L edge does not cross (X, Y)");
  }
}

/// N*_L(S) inside Y, with N*_L(empty) = Y.
VertexSet common_in(const Graph& l, const VertexSet& s, const VertexSet& y) {
  if (s.empty()) return y;
  return common_neighborhood(l, s) & y;
}

/// B(W) = { x outside W : 2h |N_G(x) n W| >= |W| }.
bool in_bad(const Graph& g, Vertex x, const VertexSet& w, int h) {
  return !w.contains(x) && 2 * h * g.neighbors(x).intersection_count(w) >= w.count();
}

/// Calls visit on every transversal of the parts indexed by `members`.
template <class F>
void for_each_transversal(const std::vector<std::vector<Vertex>>& parts, const std::vector<int>& members, int universe, F&& visit) {
  std::vector<std::size_t> pos(members.size(), 0);
  while (true) {
    VertexSet t(universe);
    for (std::size_t i = 0; i < members.size(); ++i) t.insert(parts[static_cast<std::size_t>(members[i])][pos[i]]);
    if (!visit(t)) return;
    std::size_t i = members.size();
    while (i > 0) {
      --i;
      if (++pos[i] < parts[static_cast<std::size_t>(members[i])].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (members.empty()) return;
  }
}

class KeyLemma {
 public:
  KeyLemma(const Host& host, const Graph& l, const BipartiteTemplate& h, const KeyLemmaInput& input, const Thresholds& th)
      : g_(host.graph), host_(host), l_(l), h_(h), th_(th), hyper_(neighborhood_hypergraph(h)) {
    const auto& ground = hyper_.ground;
    for (std::size_t i = 0; i < ground.size(); ++i) index_[ground[i]] = static_cast<int>(i);
    for (const auto& e : hyper_.edges) {
      std::vector<int> members;
      e.for_each([&](Vertex v) { members.push_back(index_.at(v)); });
      edges_.push_back(std::move(members));
    }
    check_blowup(input);
  }

  EmbeddingOutcome run(std::uint64_t seed) {
    EmbeddingOutcome out;
    std::mt19937_64 rng(seed);
    const auto a_count = parts_.size();
    std::vector<Vertex> phi(a_count);
    for (int attempt = 1; attempt <= th_.retries; ++attempt) {
      for (std::size_t i = 0; i < a_count; ++i) phi[i] = parts_[i][uniform_below(rng, parts_[i].size())];
      if (attempt_phi(phi, attempt, out, true)) return out;
    }
    // Exhaustive sweep over phi in lexicographic order of part positions.
    std::vector<std::size_t> pos(a_count, 0);
    std::int64_t tried = 0;
    int failures = 0;
    while (tried < th_.search_cap) {
      for (std::size_t i = 0; i < a_count; ++i) phi[i] = parts_[i][pos[i]];
      ++tried;
      if (attempt_phi(phi, th_.retries + static_cast<int>(tried), out, false)) {
        out.trace.push_back({th_.retries + static_cast<int>(tried), "exhaustive",
                             "succeeded after " + std::to_string(tried) + " maps, " + std::to_string(failures) + " rejected"});
        return out;
      }
      ++failures;
      std::size_t i = a_count;
      bool done = true;
      while (i > 0) {
        --i;
        if (++pos[i] < parts_[i].size()) {
          done = false;
          break;
        }
        pos[i] = 0;
      }
      if (done) break;
    }
    out.trace.push_back({th_.retries + static_cast<int>(tried), "exhaustive",
                         "no map succeeded among " + std::to_string(tried) + " candidates"});
    return out;
  }

 private:
  void check_blowup(const KeyLemmaInput& input) {
    const auto& ground = hyper_.ground;
    require(input.parts.size() == ground.size(), ErrorCode::BadBlowup, "need one part per vertex of A");
    const auto& x = host_.partition->x;
    VertexSet seen(g_.order());
    for (const auto& part : input.parts) {
      require(!part.empty() && part.count() == input.parts.front().count(), ErrorCode::BadBlowup,
              "blowup parts must be nonempty and of equal size");
      require(part.is_subset_of(x), ErrorCode::BadBlowup, "blowup part leaves X");
      require(!part.intersects(seen), ErrorCode::BadBlowup, "blowup parts overlap");
      seen |= part;
      parts_.push_back(part.to_vector());
    }
    std::int64_t checked = 0;
    for (const auto& members : edges_) {
      if (members.empty()) continue;
      for_each_transversal(parts_, members, g_.order(), [&](const VertexSet& t) {
        require(++checked <= th_.search_cap, ErrorCode::TooLarge, "blowup too large to verify");
        if (input.rich_sets) {
          const auto& d = *input.rich_sets;
          require(std::find(d.begin(), d.end(), t) != d.end(), ErrorCode::BadBlowup,
                  "blowup edge " + show(t) + " is not in D");
        }
        require(BigInt(common_in(l_, t, host_.partition->y).count()) >= th_.c_hs, ErrorCode::BadBlowup,
                "blowup edge " + show(t) + " is not rich");
        return true;
      });
    }
  }

  bool attempt_phi(const std::vector<Vertex>& phi, int attempt, EmbeddingOutcome& out, bool log_failures) {
    const auto note = [&](const std::string& event, const std::string& detail) {
      if (log_failures) out.trace.push_back({attempt, event, detail});
    };
    // Condition 1: phi(A) independent.
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = i + 1; j < phi.size(); ++j)
        if (g_.adjacent(phi[i], phi[j])) {
          note("condition1", "phi(A) = " + show(phi) + " is not independent");
          return false;
        }
    // Condition 2: no phi(u), u outside e, lies in B(N*_L(phi(e))).
    const auto& y = host_.partition->y;
    const int h = h_.h();
    std::vector<VertexSet> common;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      VertexSet image(g_.order());
      for (int i : edges_[k]) image.insert(phi[static_cast<std::size_t>(i)]);
      common.push_back(common_in(l_, image, y));
      for (std::size_t u = 0; u < phi.size(); ++u) {
        if (std::find(edges_[k].begin(), edges_[k].end(), static_cast<int>(u)) != edges_[k].end()) continue;
        if (in_bad(g_, phi[u], common.back(), h)) {
          note("condition2", "phi(" + std::to_string(hyper_.ground[u]) + ") lies in the bad set of edge " +
                                 std::to_string(k));
          return false;
        }
      }
    }
    // Gamma(e_i) = N*_L(phi(e_i)) minus the neighbourhoods of phi(A \ e_i).
    std::vector<VertexSet> gamma;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      VertexSet set = common[k];
      for (std::size_t u = 0; u < phi.size(); ++u)
        if (std::find(edges_[k].begin(), edges_[k].end(), static_cast<int>(u)) == edges_[k].end())
          set -= g_.neighbors(phi[u]);
      gamma.push_back(std::move(set));
    }
    int t = th_.hall_t > 0 ? th_.hall_t : std::max(1, static_cast<int>(th_.c_hs / (2 * h)));
    std::optional<std::vector<VertexSet>> hall;
    for (; t >= 1; --t)
      if ((hall = hall_disjoint_sets(gamma, t))) break;
    if (!hall) {
      note("hall", "no system of disjoint sets, even for t = 1");
      return false;
    }
    note("hall", "disjoint " + std::to_string(t) + "-sets chosen");
    std::vector<Vertex> chosen(gamma.size(), -1);
    std::int64_t nodes = 0;
    int fallbacks = 0;
    if (!place(0, *hall, chosen, nodes, fallbacks)) {
      note("placement", "no independent choice of B after " + std::to_string(nodes) + " nodes");
      return false;
    }
    VertexMap map;
    map.image.assign(static_cast<std::size_t>(h), -1);
    for (std::size_t i = 0; i < phi.size(); ++i) map.image[static_cast<std::size_t>(hyper_.ground[i])] = phi[i];
    for (std::size_t k = 0; k < chosen.size(); ++k) map.image[static_cast<std::size_t>(hyper_.sources[k])] = chosen[k];
    bool in_l = true;
    for (const auto& [u, v] : h_.graph.edges()) in_l = in_l && l_.adjacent(map[u], map[v]);
    if (!in_l || !is_bip_induced_copy(host_, h_, map)) {
      out.trace.push_back({attempt, "verify", "assembled map failed the induced-copy check"});
      return false;
    }
    out.trace.push_back({attempt, "placement", "B placed with " + std::to_string(fallbacks) + " fallback choices"});
    out.trace.push_back({attempt, "verified", "map " + show(map.image)});
    out.found = true;
    out.map = std::move(map);
    return true;
  }

  /// Sequential choice of b_i in U'_i, preferring vertices outside the later
  /// bad sets B(U'_j), backtracking when a later U'_j would empty out.
  bool place(std::size_t i, const std::vector<VertexSet>& avail, std::vector<Vertex>& chosen, std::int64_t& nodes,
             int& fallbacks) {
    if (i == avail.size()) return true;
    if (++nodes > th_.search_cap) return false;
    const int h = h_.h();
    std::vector<Vertex> preferred, rest;
    avail[i].for_each([&](Vertex v) {
      bool bad = false;
      for (std::size_t j = i + 1; j < avail.size() && !bad; ++j) bad = in_bad(g_, v, avail[j], h);
      (bad ? rest : preferred).push_back(v);
    });
    const auto try_one = [&](Vertex v) {
      std::vector<VertexSet> next = avail;
      for (std::size_t j = i + 1; j < next.size(); ++j) {
        next[j] -= g_.neighbors(v);
        next[j].erase(v);
        if (next[j].empty()) return false;
      }
      chosen[i] = v;
      return place(i + 1, next, chosen, nodes, fallbacks);
    };
    for (Vertex v : preferred)
      if (try_one(v)) return true;
    for (Vertex v : rest)
      if (try_one(v)) {
        ++fallbacks;
        return true;
      }
    return false;
  }

  const Graph& g_;
  const Host& host_;
  const Graph& l_;
  const BipartiteTemplate& h_;
  const Thresholds& th_;
  NeighborhoodHypergraph hyper_;
  std::map<Vertex, int> index_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<Vertex>> parts_;
};

}  // namespace

EmbeddingOutcome key_lemma_embed(const Host& host, const Graph& l, const BipartiteTemplate& h, const KeyLemmaInput& input,
                                 const Thresholds& th, std::uint64_t seed) {
  require(host.partition.has_value(), ErrorCode::NoPartition, "key lemma needs a bipartition (X, Y)");
  validate_partition(*host.partition, host.graph.order());
  validate(th);
  check_cross_subgraph(host, l);
  return KeyLemma(host, l, h, input, th).run(seed);
}

// ---------------------------------------------------------------- asymmetric

namespace {

/// Backtracking search for disjoint m-subsets of `pool`, one per vertex of A,
/// with every blowup edge rich; calls found(parts) until it returns true.
class BlowupSearch {
 public:
  BlowupSearch(const Graph& m, const VertexSet& y, const std::vector<std::vector<int>>& edges, int a_count, int size,
               const BigInt& c_hs, std::int64_t cap)
      : m_(m), y_(y), a_count_(a_count), size_(size), c_hs_(c_hs), cap_(cap), closing_(static_cast<std::size_t>(a_count)) {
    for (const auto& e : edges)
      if (!e.empty()) closing_[static_cast<std::size_t>(*std::max_element(e.begin(), e.end()))].push_back(e);
  }

  bool run(const std::vector<Vertex>& pool, const std::function<bool(const std::vector<VertexSet>&)>& found) {
    std::vector<std::vector<Vertex>> parts;
    std::vector<bool> used(pool.size(), false);
    return assign(pool, used, parts, found);
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  bool assign(const std::vector<Vertex>& pool, std::vector<bool>& used, std::vector<std::vector<Vertex>>& parts,
              const std::function<bool(const std::vector<VertexSet>&)>& found) {
    if (static_cast<int>(parts.size()) == a_count_) {
      std::vector<VertexSet> out;
      for (const auto& p : parts) out.push_back(VertexSet::of(m_.order(), p));
      return found(out);
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!used[i]) free.push_back(i);
    if (static_cast<int>(free.size()) < size_) return false;
    std::vector<bool> pick(free.size(), false);
    std::fill(pick.begin(), pick.begin() + size_, true);
    do {
      if (++nodes_ > cap_) return false;
      std::vector<Vertex> part;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (pick[i]) part.push_back(pool[free[i]]);
      parts.push_back(part);
      if (closes_rich(parts)) {
        for (std::size_t i = 0; i < free.size(); ++i)
          if (pick[i]) used[free[i]] = true;
        if (assign(pool, used, parts, found)) return true;
        for (std::size_t i = 0; i < free.size(); ++i)
          if (pick[i]) used[free[i]] = false;
      }
      parts.pop_back();
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
  }

  bool closes_rich(const std::vector<std::vector<Vertex>>& parts) const {
    bool ok = true;
    for (const auto& e : closing_[parts.size() - 1]) {
      for_each_transversal(parts, e, m_.order(), [&](const VertexSet& t) {
        ok = BigInt(common_in(m_, t, y_).count()) >= c_hs_;
        return ok;
      });
      if (!ok) return false;
    }
    return true;
  }

  const Graph& m_;
  const VertexSet& y_;
  int a_count_;
  int size_;
  BigInt c_hs_;
  std::int64_t cap_;
  std::vector<std::vector<std::vector<int>>> closing_;
  std::int64_t nodes_ = 0;
};

struct RichCount {
  std::int64_t rich = 0;
  std::int64_t total = 0;
};

RichCount count_rich_sets(const Graph& m, const VertexSet& y, const std::vector<Vertex>& pool, int p, const BigInt& c_hs,
                          std::int64_t cap) {
  RichCount out;
  if (p < 1 || static_cast<int>(pool.size()) < p) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    VertexSet s(m.order());
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) s.insert(pool[i]);
    ++out.total;
    if (BigInt(common_in(m, s, y).count()) >= c_hs) ++out.rich;
  } while (out.total < cap && std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

constexpr int kKeyLemmaCallsPerVertex = 16;

}  // namespace

EmbeddingOutcome asymmetric_embed(const Host& host, const Graph& m, const BipartiteTemplate& h, int delta_y,
                                  const Thresholds& th, std::uint64_t seed) {
  require(host.partition.has_value(), ErrorCode::NoPartition, "asymmetric embedding needs a bipartition (X, Y)");
  const auto& parts = *host.partition;
  validate_partition(parts, host.graph.order());
  validate(th);
  check_cross_subgraph(host, m);
  require(delta_y >= 0, ErrorCode::InvalidArgument, "delta_Y must be non-negative");
  parts.y.for_each([&](Vertex y) {
    require(m.degree(y) >= delta_y, ErrorCode::HypothesisUnmet,
            "vertex " + std::to_string(y) + " has M-degree below delta_Y");
  });

  EmbeddingOutcome out;
  int p = 0;
  h.b.for_each([&](Vertex b) { p = std::max(p, h.graph.degree(b)); });
  {
    const Rational lhs = Rational(m.size()) * pow(Rational(delta_y), static_cast<unsigned>(std::max(p - 1, 0)));
    const Rational rhs = th.c3 * pow(Rational(parts.x.count()), static_cast<unsigned>(p));
    out.trace.push_back({0, "hypothesis", std::string("e(M) delta^(p-1) >= C3 |X|^p ") + (lhs >= rhs ? "holds" : "fails")});
  }

  const auto hyper = neighborhood_hypergraph(h);
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < hyper.ground.size(); ++i) index[hyper.ground[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> edges;
  for (const auto& e : hyper.edges) {
    std::vector<int> members;
    e.for_each([&](Vertex v) { members.push_back(index.at(v)); });
    edges.push_back(std::move(members));
  }

  std::vector<Vertex> passing, failing;
  parts.y.for_each([&](Vertex y) {
    const auto pool = m.neighbors(y).to_vector();
    const auto count = count_rich_sets(m, parts.y, pool, p, th.c_hs, th.search_cap);
    const bool pass = count.total > 0 && Rational(count.rich) >= th.gamma * count.total;
    (pass ? passing : failing).push_back(y);
  });
  out.trace.push_back({0, "gamma-gate", std::to_string(passing.size()) + " of " + std::to_string(parts.y.count()) +
                                            " vertices of Y pass"});
  auto order = passing;
  order.insert(order.end(), failing.begin(), failing.end());

  int attempt = 0;
  for (Vertex y : order) {
    const auto pool = m.neighbors(y).to_vector();
    BlowupSearch search(m, parts.y, edges, static_cast<int>(hyper.ground.size()), th.m_blow, th.c_hs, th.search_cap);
    int calls = 0;
    std::optional<EmbeddingOutcome> success;
    search.run(pool, [&](const std::vector<VertexSet>& blow) {
      ++attempt;
      ++calls;
      auto inner = key_lemma_embed(host, m, h, {blow, std::nullopt}, th, seed + static_cast<std::uint64_t>(y));
      if (inner.found) {
        out.trace.push_back({attempt, "blowup", "y = " + std::to_string(y) + ", key lemma succeeded"});
        for (auto& entry : inner.trace) out.trace.push_back(std::move(entry));
        success = std::move(inner);
        return true;
      }
      out.trace.push_back({attempt, "blowup", "y = " + std::to_string(y) + ", key lemma failed"});
      return calls >= kKeyLemmaCallsPerVertex;
    });
    if (success) {
      out.found = true;
      out.map = success->map;
      return out;
    }
    if (calls == 0) out.trace.push_back({attempt, "blowup", "y = " + std::to_string(y) + ", no rich blowup in N_M(y)"});
  }
  return out;
}

}  // namespace indturan
