#include "fixtures.hpp"

#include "error.hpp"

#include <doctest.h>

using namespace fx;

namespace {

Graph k33_minus_matching() {
  Graph g(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) g.add_edge(i, 3 + j);
  return g;
}

std::set<VertexMap> library_maps(const Graph& g, const Graph& h, bool induced) {
  std::set<VertexMap> out;
  for_each_embedding(g, h, {induced, {}}, [&](const VertexMap& m) {
    out.insert(m);
    return true;
  });
  return out;
}

Host partitioned(const Graph& g, std::initializer_list<Vertex> x) {
  const VertexSet xs(g.order(), x);
  return {g, Bipartition{xs, VertexSet::full(g.order()) - xs}, 2};
}

}  // namespace

TEST_CASE("K_{s,s} detection") {
  const auto c4 = contains_kss(cycle(4), 2);
  REQUIRE(c4);
  CHECK(c4->left == VertexSet(4, {0, 2}));
  CHECK(c4->right == VertexSet(4, {1, 3}));
  CHECK_FALSE(contains_kss(path(7), 2));
  CHECK_FALSE(contains_kss(star(5), 2));
  CHECK_FALSE(contains_kss(k33_minus_matching(), 2));
  CHECK(contains_kss(complete(4), 2));
  CHECK(contains_kss(complete(6), 3));
  CHECK_FALSE(contains_kss(complete(5), 3));
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_graph(8, 0.45, seed);
    for (int s = 1; s <= 3; ++s) {
      const auto w = contains_kss(g, s);
      CHECK(w.has_value() == brute_has_kss(g, s));
      if (w) {
        CHECK(w->left.count() == s);
        CHECK(w->right.count() == s);
        CHECK_FALSE(w->left.intersects(w->right));
        w->left.for_each([&](Vertex u) { w->right.for_each([&](Vertex v) { CHECK(g.adjacent(u, v)); }); });
      }
    }
  }
}

TEST_CASE("induced matching examples") {
  CHECK(contains_induced(cycle(4), path(3)));
  CHECK_FALSE(contains_induced(cycle(4), path(4)));
  CHECK_FALSE(contains_induced(cycle(6), cycle(4)));
  const auto m = contains_induced(petersen(), cycle(5));
  REQUIRE(m);
  CHECK(induced_by_definition(petersen(), cycle(5), *m));
  CHECK(contains_subgraph(complete(4), cycle(4)));
  CHECK_FALSE(contains_induced(complete(4), cycle(4)));
}

TEST_CASE("matcher agrees with permutation enumeration") {
  const std::vector<Graph> patterns{path(3), path(4), cycle(4), star(3), graph_of(4, {{0, 1}, {2, 3}}), cycle(5)};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = random_graph(7, 0.5, seed * 7);
    for (const auto& h : patterns) {
      CHECK(library_maps(g, h, true) == brute_induced_maps(g, h));
      CHECK(contains_induced(g, h).has_value() == brute_has_induced(g, h));
      CHECK(contains_subgraph(g, h).has_value() == brute_has_subgraph(g, h));
    }
  }
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const Graph g = random_graph(8, 0.4, seed);
    CHECK(contains_induced(g, cycle(4)).has_value() == brute_has_induced(g, cycle(4)));
    CHECK(contains_induced(g, path(5)).has_value() == brute_has_induced(g, path(5)));
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(theta(3, 2), cycle(6)));
  CHECK_FALSE(are_isomorphic(cycle(6), graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_FALSE(are_isomorphic(path(4), star(3)));
}

TEST_CASE("bipartite induced copies") {
  const auto p3 = make_template(path(3), VertexSet(3, {0, 2}), VertexSet(3, {1}));
  const auto c4 = partitioned(cycle(4), {0, 2});
  const auto found = contains_bip_induced(c4, p3);
  REQUIRE(found);
  CHECK(is_bip_induced_copy(c4, p3, *found));
  CHECK(induced_by_definition(c4.graph, p3.graph, *found));
  CHECK_FALSE(contains_bip_induced(partitioned(complete(4), {0, 1}), p3));
  CHECK_FALSE(contains_bip_induced(partitioned(complete(4), {0}), p3));

  // C6 planted in a larger host whose extra edges never touch its parts' non-edges.
  Graph g(9);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  g.add_edge(0, 7);
  g.add_edge(6, 8);
  const auto host = partitioned(g, {0, 2, 4, 6});
  const auto c6 = coloured_template(cycle(6));
  const auto copy = contains_bip_induced(host, c6);
  REQUIRE(copy);
  CHECK(induced_by_definition(g, cycle(6), *copy));

  try {
    contains_bip_induced(Host{cycle(4), std::nullopt, 2}, p3);
    FAIL("expected NoPartition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPartition);
  }
}

TEST_CASE("extremal numbers against labelled enumeration") {
  CHECK(extremal_star(4, cycle(4), 2).value == 4);
  for (int n = 2; n <= 5; ++n) {
    CHECK(extremal_star(n, cycle(4), 2).value == brute_ex_star(n, cycle(4), 2));
    CHECK(extremal_star(n, path(4), 2).value == brute_ex_star(n, path(4), 2));
    CHECK(extremal_star(n, path(3), 3).value == brute_ex_star(n, path(3), 3));
    CHECK(extremal_plain(n, cycle(4)).value == brute_ex_plain(n, cycle(4)));
  }
  for (int n = 1; n <= 6; ++n) CHECK(extremal_star(n, path(2), 2).value == 0);
  const auto five = extremal_star(5, cycle(4), 2);
  CHECK(five.value >= 4);
  CHECK(five.witness.size() == five.value);
  CHECK_FALSE(contains_kss(five.witness, 2));
  CHECK_FALSE(contains_induced(five.witness, cycle(4)));
  try {
    extremal_star(9, cycle(4), 2);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("bipartite extremal numbers") {
  const auto p3 = make_template(path(3), VertexSet(3, {0, 2}), VertexSet(3, {1}));
  CHECK(extremal_bip_star(2, p3, 2).value == 1);
  CHECK(extremal_bip_star(2, coloured_template(cycle(4)), 2).value == 1);
  CHECK(extremal_bip_star(3, p3, 2).value <= 2);
  const auto c4 = coloured_template(cycle(4));
  const auto r = extremal_bip_star(4, c4, 2);
  CHECK(2 * r.value >= extremal_star(4, cycle(4), 2).value);
  REQUIRE(r.partition);
  CHECK(cross_edges(r.witness, *r.partition).size() == r.value);
  CHECK_FALSE(contains_kss(r.witness, 2));
  CHECK_FALSE(contains_bip_induced(Host{r.witness, r.partition, 2}, c4));
}

TEST_CASE("orderly canonical forms") {
  int canonical = 0;
  for_each_labelled_graph(4, [&](const Graph& g) { canonical += is_orderly_canonical(g) ? 1 : 0; });
  CHECK(canonical == 11);  // graphs on 4 vertices up to isomorphism
}

TEST_CASE("Kovari-Sos-Turan") {
  CHECK(kst_check(partitioned(cycle(6), {0, 2, 4})));
  CHECK(kst_check(partitioned(Graph(10), {0, 1, 2, 3, 4})));
  try {
    kst_check(partitioned(cycle(4), {0, 2}));
    FAIL("expected NotKssFree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotKssFree);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int m = 8;
    const Graph g = random_bipartite_kss_free(m, 2, seed);
    CHECK_FALSE(brute_has_kss(g, 2));
    VertexSet x(2 * m);
    for (int v = 0; v < m; ++v) x.insert(v);
    CHECK(kst_check(Host{g, Bipartition{x, VertexSet::full(2 * m) - x}, 2}));
  }
}
