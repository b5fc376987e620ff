#include "fixtures.hpp"

#include "error.hpp"

#include <doctest.h>

#include <bit>

using namespace fx;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

VertexSet brute_bad_set(const Graph& g, const VertexSet& w, const Rational& c) {
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (w.contains(v)) continue;
    int hits = 0;
    w.for_each([&](Vertex u) { hits += g.adjacent(u, v) ? 1 : 0; });
    if (Rational(hits) >= c * w.count()) out.insert(v);
  }
  return out;
}

Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

BipartiteTemplate edge_template() { return make_template(path(2), VertexSet(2, {0}), VertexSet(2, {1})); }

}  // namespace

TEST_CASE("formula constants") {
  CHECK(formula_rich_threshold(4, 2) == 2 * 16 * 16 * 16);
  CHECK(formula_blowup_multiplicity(4, 2) == BigInt(512) * 4 * 256);
  CHECK(formula_regularity_log2(make_rational(1, 2)) == 10);
  CHECK(formula_regularity_log2(make_rational(2, 3)) == 8);
  CHECK(formula_c3(2, 1, 1, make_rational(1, 2)) == 2 * 64);
  CHECK(formula_epsilon(2, 1, 1) == make_rational(1, 512));
  const auto th = formula_thresholds(edge_template(), 1);
  CHECK(th.c_hs == 64);
  CHECK(th.m_blow == 256);
  CHECK(code_of([] { formula_thresholds(coloured_template(cycle(6)), 3); }) == ErrorCode::TooLarge);
}

TEST_CASE("threshold validation") {
  Thresholds th;
  CHECK_NOTHROW(validate(th));
  th.c = 1;
  CHECK(code_of([&] { validate(th); }) == ErrorCode::InvalidArgument);
  th = {};
  th.gamma = 1;
  CHECK(code_of([&] { validate(th); }) == ErrorCode::InvalidArgument);
  th = {};
  th.m_blow = 0;
  CHECK(code_of([&] { validate(th); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("bad sets") {
  CHECK(bad_set(star(4), VertexSet(5, {1, 2, 3, 4}), make_rational(1, 2)).set == VertexSet(5, {0}));
  CHECK(bad_set(Graph(6), VertexSet(6, {0, 1}), make_rational(1, 2)).set.empty());
  CHECK(code_of([] { bad_set(star(4), VertexSet(5), make_rational(1, 2)); }) == ErrorCode::EmptyQuery);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_kss_free(60, 2, seed);
    VertexSet w(60);
    for (int v = 0; v < 32; ++v) w.insert(v);
    const auto r = bad_set(g, w, make_rational(1, 2), 2);
    CHECK(r.set == brute_bad_set(g, w, make_rational(1, 2)));
    CHECK(r.lemma_applies);
    CHECK(r.bound_holds);
    CHECK(Rational(r.set.count()) < 8);
  }
  // Too small a W: the bound is not claimed.
  const auto small = bad_set(random_kss_free(20, 2, 3), VertexSet(20, {0, 1, 2, 3, 4, 5, 6, 7}), make_rational(1, 2), 2);
  CHECK_FALSE(small.lemma_applies);
  CHECK_FALSE(small.disproves_lemma());
}

TEST_CASE("rich s-sets") {
  const auto k24 = complete_bipartite(2, 4);
  const auto k44 = complete_bipartite(4, 4);
  const auto r = rich_s_set(k44.graph, k44.parts(), Rational(1), 2);
  REQUIRE(r.set);
  CHECK(r.set->count() == 2);
  CHECK(r.set->is_subset_of(k44.a));
  CHECK(r.common == 4);
  CHECK(r.threshold == 1);

  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g(18);
    std::mt19937_64 rng(seed);
    for (int x = 0; x < 6; ++x)
      for (int y = 6; y < 18; ++y)
        if (uniform_below(rng, 4) != 0) g.add_edge(x, y);
    const Rational c(g.size(), 72);
    if (c * 6 < 4) continue;
    const Bipartition parts{VertexSet(18, {0, 1, 2, 3, 4, 5}), VertexSet::full(18) - VertexSet(18, {0, 1, 2, 3, 4, 5})};
    const auto found = rich_s_set(g, parts, c, 2);
    REQUIRE(found.set);
    ++checked;
    CHECK(found.set->count() == 2);
    CHECK(Rational(found.common) >= c * c / 4 * 12);
    CHECK(found.common == (common_neighborhood(g, *found.set) & parts.y).count());
  }
  CHECK(checked > 10);
  CHECK(code_of([&] { rich_s_set(k24.graph, k24.parts(), make_rational(1, 2), 2); }) == ErrorCode::HypothesisUnmet);
  const auto sparse = complete_bipartite(3, 3);
  Graph thin = sparse.graph;
  thin.remove_edge(0, 3);
  thin.remove_edge(1, 4);
  thin.remove_edge(2, 5);
  CHECK(code_of([&] { rich_s_set(thin, sparse.parts(), Rational(1), 1); }) == ErrorCode::HypothesisUnmet);
}

TEST_CASE("regularization") {
  const auto peter = regularize(petersen(), make_rational(1, 2), make_rational(1, 4));
  CHECK(peter.m == 10);
  CHECK(peter.edges == 15);
  CHECK(peter.almost_regular);
  CHECK(peter.k_log2 == 10);

  Graph clique_plus(16);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) clique_plus.add_edge(i, j);
  const auto core = regularize(clique_plus, make_rational(1, 2), make_rational(1, 4));
  CHECK(core.almost_regular);
  CHECK(core.subgraph.to_host == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(core.density_guarantee);

  CHECK(code_of([] { regularize(path(10), make_rational(1, 2), Rational(1)); }) == ErrorCode::HypothesisUnmet);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_graph(24, 0.5, seed);
    const Rational alpha = make_rational(1, 2);
    const auto r = regularize(g, alpha, make_rational(1, 4));
    const auto induced = induced_subgraph(g, VertexSet::of(24, r.subgraph.to_host));
    CHECK(induced.graph == r.subgraph.graph);
    CHECK(r.edges == r.subgraph.graph.size());
    CHECK(r.almost_regular);
    CHECK(is_almost_regular_pow2(r.subgraph.graph, r.k_log2));
    const auto stats = degree_stats(r.subgraph.graph);
    CHECK(Rational(stats.max_degree) <= Rational(1024) * stats.min_degree);
  }
}

TEST_CASE("tree embedding basics") {
  const Graph c6 = cycle(6);
  const Host host{c6, std::nullopt, 2};
  const auto emitted = emitted_tree_copies(host, whole(c6), path(3), 2);
  CHECK(emitted == brute_good_tree_copies(c6, c6.vertices(), c6, path(3), 2));
  CHECK(emitted.empty());
  // Large d makes every bad set empty, leaving all induced copies.
  CHECK(emitted_tree_copies(host, whole(c6), path(3), 1000) == brute_induced_maps(c6, path(3)));
  CHECK(emitted_tree_copies(host, whole(c6), path(3), 1000).size() == 12);

  const auto singles = greedy_tree_embed(host, whole(c6), Graph(1), 2);
  CHECK(singles.copies.size() == 6);
  CHECK(greedy_tree_embed(Host{complete(4), std::nullopt, 2}, whole(complete(4)), path(3), 1).copies.empty());
  const auto report = greedy_tree_embed(host, whole(c6), path(3), 2);
  CHECK(report.guaranteed == 6);
  CHECK_FALSE(report.hypothesis_holds);

  const auto order = leaf_extension_order(star(3));
  REQUIRE(order.size() == 4);
  CHECK(order[0] == std::pair<Vertex, Vertex>{0, -1});
  CHECK(order[3] == std::pair<Vertex, Vertex>{3, 0});
  CHECK(code_of([] { leaf_extension_order(cycle(4)); }) == ErrorCode::InvalidArgument);
  HostSubgraph foreign{VertexSet::full(6), complete(6)};
  CHECK(code_of([&] { greedy_tree_embed(host, foreign, path(3), 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("tree embedding against brute force") {
  const Graph pet = petersen();
  const Host ph{pet, std::nullopt, 2};
  bool dup = true;
  const auto p = emitted_tree_copies(ph, whole(pet), path(3), 24, &dup);
  CHECK_FALSE(dup);
  CHECK(p == brute_good_tree_copies(pet, pet.vertices(), pet, path(3), 24));
  CHECK(p.size() == 60);

  const Graph g = grid(3, 4);
  Graph l_edges(12);
  for (const auto& [u, v] : g.edges())
    if ((u + v) % 3 != 0) l_edges.add_edge(u, v);
  const HostSubgraph trimmed{VertexSet::full(12) - VertexSet(12, {11}), l_edges};
  const Host gh{g, std::nullopt, 2};
  for (int d : {4, 8, 12, 100}) {
    for (const auto& tree : {path(3), path(4), star(3)}) {
      const auto got = emitted_tree_copies(gh, trimmed, tree, d, &dup);
      CHECK_FALSE(dup);
      CHECK(got == brute_good_tree_copies(g, trimmed.vertices, trimmed.edges, tree, d));
      for (const auto& m : got) CHECK(induced_by_definition(g, tree, m));
    }
  }
}

TEST_CASE("heavy stars and paths") {
  const auto k35 = complete_bipartite(3, 5);
  CHECK(heavy_star_classify(k35.graph, k35.a, 5));
  CHECK_FALSE(heavy_star_classify(k35.graph, k35.a, 6));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph l = random_bipartite_kss_free(7, 3, seed, 0.7);
    for (int p = 1; p <= 3; ++p) {
      std::int64_t stars = 0, heavy = 0;
      for (int v = 0; v < l.order(); ++v) {
        const auto nb = l.neighbors(v).to_vector();
        const int k = static_cast<int>(nb.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
          if (std::popcount(mask) != p) continue;
          ++stars;
          int common = 0;
          for (int w = 0; w < l.order(); ++w) {
            bool all = true;
            for (int i = 0; i < k; ++i)
              if ((mask >> i) & 1U) all = all && l.adjacent(w, nb[static_cast<std::size_t>(i)]);
            common += all ? 1 : 0;
          }
          heavy += common >= 2 ? 1 : 0;
        }
      }
      const auto count = heavy_star_count(l, p, 2);
      CHECK(count.stars == stars);
      CHECK(count.heavy == heavy);
    }
  }
  for (int m : {3, 5}) {
    const Graph k2m = complete_bipartite(2, m).graph;
    CHECK(heavy_path_classify(k2m, 0, 2, 1, m));
    CHECK_FALSE(heavy_path_classify(k2m, 0, 2, 1, m + 1));
    const auto count = heavy_path_count(k2m, m);
    CHECK(count.paths == m + 2 * (m * (m - 1) / 2));
    CHECK(count.heavy == m);
  }
  CHECK(code_of([] { heavy_path_classify(cycle(4), 0, 2, 1, 1); }) == ErrorCode::InvalidArgument);

  const Graph l = complete_bipartite(3, 4).graph;
  const VertexMap copy{{3, 0, 1}};  // cherry centred at host vertex 3
  CHECK_FALSE(is_admissible(copy, graph_of(3, {{0, 1}, {0, 2}}), l, 2, 4));
  CHECK(is_admissible(copy, graph_of(3, {{0, 1}, {0, 2}}), l, 2, 5));
}

TEST_CASE("Hall step") {
  const auto two = hall_disjoint_sets({VertexSet(5, {1, 2}), VertexSet(5, {3, 4})}, 2);
  REQUIRE(two);
  CHECK((*two)[0] == VertexSet(5, {1, 2}));
  CHECK((*two)[1] == VertexSet(5, {3, 4}));
  CHECK_FALSE(hall_disjoint_sets({VertexSet(2, {1}), VertexSet(2, {1})}, 1));

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const int q = 1 + static_cast<int>(uniform_below(rng, 5));
    const int ground = 1 + static_cast<int>(uniform_below(rng, 12));
    const int t = 1 + static_cast<int>(uniform_below(rng, 3));
    std::vector<VertexSet> sets(static_cast<std::size_t>(q), VertexSet(ground));
    for (auto& s : sets)
      for (int v = 0; v < ground; ++v)
        if (uniform_below(rng, 3) == 0) s.insert(v);
    bool hall = true;
    for (int mask = 1; mask < (1 << q); ++mask) {
      VertexSet u(ground);
      for (int i = 0; i < q; ++i)
        if ((mask >> i) & 1) u |= sets[static_cast<std::size_t>(i)];
      hall = hall && u.count() >= std::popcount(static_cast<unsigned>(mask)) * t;
    }
    const auto got = hall_disjoint_sets(sets, t);
    CHECK(got.has_value() == hall);
    if (!got) continue;
    VertexSet seen(ground);
    for (int i = 0; i < q; ++i) {
      const auto& u = (*got)[static_cast<std::size_t>(i)];
      CHECK(u.count() == t);
      CHECK(u.is_subset_of(sets[static_cast<std::size_t>(i)]));
      CHECK_FALSE(u.intersects(seen));
      seen |= u;
    }
  }
  // q sets each of size q*t always succeed.
  for (int q = 1; q <= 4; ++q) {
    std::vector<VertexSet> sets;
    for (int i = 0; i < q; ++i) {
      VertexSet s(20);
      for (int k = 0; k < 2 * q; ++k) s.insert((i + k * 3) % 20);
      sets.push_back(s);
    }
    CHECK(hall_disjoint_sets(sets, 2));
  }
}

TEST_CASE("key lemma on planted blowups") {
  const auto c4 = coloured_template(cycle(4));
  auto f = planted_blowup(c4, 2, 1);
  const auto out = key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7);
  REQUIRE(out.found);
  CHECK(induced_by_definition(f.host.graph, f.h.graph, *out.map));
  CHECK(is_bip_induced_copy(f.host, f.h, *out.map));
  const auto again = key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7);
  CHECK(again.map == out.map);
  CHECK(again.trace.size() == out.trace.size());

  auto p4 = planted_blowup(coloured_template(path(4)), 9, 2);
  const auto po = key_lemma_embed(p4.host, p4.l, p4.h, p4.input, p4.th, 1);
  REQUIRE(po.found);
  CHECK(induced_by_definition(p4.host.graph, p4.h.graph, *po.map));

  auto e = planted_blowup(edge_template(), 1, 1);
  const auto eo = key_lemma_embed(e.host, e.l, e.h, e.input, e.th, 3);
  REQUIRE(eo.found);
  CHECK(eo.map->image == std::vector<Vertex>{0, 1});

  f.input.rich_sets = f.rich;
  CHECK(key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7).found);
  // Both hyperedges of C4 coincide, so drop every listing of the last transversal.
  const auto last = f.rich.back();
  std::erase(*f.input.rich_sets, last);
  CHECK(code_of([&] { key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7); }) == ErrorCode::BadBlowup);
  f.input.rich_sets.reset();
  f.th.c_hs = 3;
  CHECK(code_of([&] { key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7); }) == ErrorCode::BadBlowup);
  f.th.c_hs = 1;
  f.input.parts[0].erase(f.input.parts[0].first());
  CHECK(code_of([&] { key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 7); }) == ErrorCode::BadBlowup);
}

TEST_CASE("key lemma reports failure honestly") {
  // Parts joined inside X: condition 1 fails for every map.
  auto f = planted_blowup(coloured_template(cycle(4)), 2, 1);
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 4; ++v) f.host.graph.add_edge(u, v);
  f.th.retries = 3;
  const auto out = key_lemma_embed(f.host, f.l, f.h, f.input, f.th, 5);
  CHECK_FALSE(out.found);
  REQUIRE_FALSE(out.trace.empty());
  CHECK(out.trace.front().event == "condition1");
}

TEST_CASE("asymmetric embedding") {
  auto f = planted_blowup(coloured_template(cycle(4)), 2, 1, 3);
  const Vertex hub = f.host.graph.order() - 3;
  f.host.partition->x.for_each([&](Vertex x) { f.host.graph.add_edge(x, hub); });
  const Graph m = f.host.graph;
  f.th.m_blow = 2;
  f.th.c_hs = 2;
  const auto out = asymmetric_embed(f.host, m, f.h, 0, f.th, 11);
  REQUIRE(out.found);
  CHECK(induced_by_definition(f.host.graph, f.h.graph, *out.map));
  CHECK(is_bip_induced_copy(f.host, f.h, *out.map));

  const Graph empty(f.host.graph.order());
  CHECK_FALSE(asymmetric_embed(f.host, empty, f.h, 0, f.th, 11).found);
  CHECK(code_of([&] { asymmetric_embed(f.host, m, f.h, 1, f.th, 11); }) == ErrorCode::HypothesisUnmet);
}

TEST_CASE("extraction") {
  // l disjoint copies with no cross edges come back unchanged.
  const auto f = rooted_path(3);
  Graph g(2 + 3 * 2);
  std::vector<VertexMap> copies;
  for (int c = 0; c < 3; ++c) {
    const Vertex a = 2 + 2 * c, b = 3 + 2 * c;
    g.add_edge(0, a);
    g.add_edge(a, b);
    g.add_edge(b, 1);
    copies.push_back(VertexMap{{0, 1, a, b}});
  }
  const auto clean = extract_induced_power(g, copies, f, 3, 2);
  REQUIRE(clean.outcome.found);
  CHECK(clean.chosen == std::vector<int>{0, 1, 2});
  CHECK(induced_by_definition(g, rooted_power(f, 3).graph, *clean.outcome.map));

  const auto planted = planted_power();
  const auto out = extract_induced_power(planted.g, planted.copies, planted.f, 2, 3);
  REQUIRE(out.outcome.found);
  CHECK(out.chosen == std::vector<int>{0, 3});
  CHECK(induced_by_definition(planted.g, rooted_power(planted.f, 2).graph, *out.outcome.map));
  CHECK(out.monochromatic_clique_free);
  CHECK_FALSE(out.kss);
  CHECK_FALSE(extract_induced_power(planted.g, planted.copies, planted.f, 4, 3).outcome.found);

  const auto edge = extract_induced_power(planted.g, planted.copies, planted.f, 2, 1);
  CHECK_FALSE(edge.monochromatic_clique_free);
  REQUIRE(edge.kss);
  CHECK(planted.g.adjacent(edge.kss->left.first(), edge.kss->right.first()));

  auto shared = planted.copies;
  shared[1].image[2] = shared[0].image[2];
  CHECK(code_of([&] { extract_induced_power(planted.g, shared, planted.f, 2, 3); }) == ErrorCode::NotSemiInduced);
  auto moved = planted.copies;
  moved[1].image[0] = 5;
  CHECK(code_of([&] { auxiliary_colouring(planted.g, moved, planted.f); }) == ErrorCode::NotSemiInduced);
}

TEST_CASE("K_{s,s}-free hosts have no monochromatic 2s-cliques") {
  for (const auto& f : {rooted_star(1), rooted_path(3)}) {
    const int q = f.non_roots().count();
    const auto roots = f.roots.to_vector();
    const int r = static_cast<int>(roots.size());
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const int copies_n = 6;
      Graph g(r + q * copies_n);
      std::vector<VertexMap> copies;
      for (int c = 0; c < copies_n; ++c) {
        VertexMap m;
        m.image.assign(static_cast<std::size_t>(f.graph.order()), -1);
        int next = r + c * q;
        for (Vertex v = 0; v < f.graph.order(); ++v) {
          const auto at = std::find(roots.begin(), roots.end(), v);
          m.image[static_cast<std::size_t>(v)] = at != roots.end() ? static_cast<Vertex>(at - roots.begin()) : next++;
        }
        for (const auto& [u, v] : f.graph.edges()) g.add_edge(m[u], m[v]);
        copies.push_back(m);
      }
      std::mt19937_64 rng(seed);
      for (int a = r; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
          if ((a - r) / q != (b - r) / q && uniform_below(rng, 3) == 0) g.add_edge(a, b);
      for (int s = 1; s <= 3; ++s) {
        const auto aux = auxiliary_colouring(g, copies, f);
        const bool clique = monochromatic_clique(aux, 2 * s).has_value();
        if (!brute_has_kss(g, s)) CHECK_FALSE(clique);
        const auto out = extract_induced_power(g, copies, f, 2, s);
        if (out.kss) CHECK(brute_has_kss(g, s));
        if (out.outcome.found) CHECK(induced_by_definition(g, rooted_power(f, 2).graph, *out.outcome.map));
      }
    }
  }
}

TEST_CASE("random hosts") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_kss_free(12, 2, seed);
    CHECK_FALSE(brute_has_kss(g, 2));
    CHECK(g == random_kss_free(12, 2, seed));
    const Graph b = random_bipartite_kss_free(6, 3, seed);
    CHECK_FALSE(brute_has_kss(b, 3));
    for (const auto& [u, v] : b.edges()) CHECK((u < 6) != (v < 6));
  }
  std::mt19937_64 rng(9);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist[uniform_below(rng, 7)];
  for (int c : hist) CHECK(c > 800);
  CHECK(kss_through_edge(cycle(4), 0, 1, 2));
  CHECK_FALSE(kss_through_edge(cycle(5), 0, 1, 2));
}
