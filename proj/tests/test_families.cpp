#include "fixtures.hpp"

#include "error.hpp"

#include <doctest.h>

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

Graph k_st(int s, int t) { return complete_bipartite(s, t).graph; }

}  // namespace

TEST_CASE("height two trees") {
  const auto t31 = height_two_tree(3, 1);
  CHECK(t31.graph.order() == 7);
  CHECK(t31.graph.size() == 6);
  CHECK(t31.roots.count() == 3);
  const auto t22 = height_two_tree(2, 2);
  CHECK(t22.graph.order() == 7);
  CHECK(t22.graph.size() == 6);
  CHECK(t22.roots.count() == 4);
  const auto t11 = height_two_tree(1, 1);
  CHECK(are_isomorphic(t11.graph, path(3)));
  CHECK(t11.roots.count() == 1);
  CHECK(t11.graph.degree(t11.roots.first()) == 1);
  CHECK(code_of([] { height_two_tree(0, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("T_{r,1,1}") {
  const auto r3 = tree_r11(3);
  CHECK(r3.graph.order() == 8);
  CHECK(r3.graph.size() == 7);
  CHECK(r3.roots.count() == 4);
  const auto r1 = tree_r11(1);
  CHECK(r1.graph == graph_of(4, {{0, 1}, {1, 2}, {0, 3}}));
  const auto r2 = tree_r11(2);
  CHECK(r2.graph.order() == 6);
  CHECK(r2.graph.size() == 5);
  CHECK(r2.roots.count() == 3);
}

TEST_CASE("rooted paths and stars") {
  const auto cherry = rooted_path(2);
  CHECK(cherry.graph == graph_of(3, {{0, 2}, {1, 2}}));
  CHECK(cherry.roots == VertexSet(3, {0, 1}));
  const auto p4 = rooted_path(3);
  CHECK(are_isomorphic(p4.graph, path(4)));
  CHECK(p4.graph.degree(0) == 1);
  CHECK(p4.graph.degree(1) == 1);
  CHECK(code_of([] { rooted_path(1); }) == ErrorCode::DegenerateRoot);
  CHECK(rooted_star(3).roots == VertexSet(4, {1, 2, 3}));
  CHECK(code_of([] { make_rooted(path(2), VertexSet(2, {0, 1})); }) == ErrorCode::DegenerateRoot);
}

TEST_CASE("rooted powers") {
  CHECK(are_isomorphic(rooted_power(rooted_path(2), 2).graph, cycle(4)));
  CHECK(are_isomorphic(rooted_power(rooted_path(2), 3).graph, k_st(2, 3)));
  for (int t = 1; t <= 3; ++t)
    for (int l = 1; l <= 3; ++l) CHECK(are_isomorphic(rooted_power(rooted_star(t), l).graph, k_st(t, l)));
  const auto p = rooted_power(height_two_tree(2, 1), 3);
  CHECK(p.graph.order() == 2 + 3 * 3);
  CHECK(p.roots == VertexSet(11, {0, 1}));
  REQUIRE(p.copies.size() == 3);
  for (const auto& c : p.copies) CHECK(is_induced_copy(p.graph, height_two_tree(2, 1).graph, c));
}

TEST_CASE("root edges are shared by every copy") {
  const auto f = make_rooted(graph_of(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), VertexSet(4, {0, 1}));
  const auto p = rooted_power(f, 3);
  CHECK(p.graph.order() == 2 + 3 * 2);
  CHECK(p.graph.size() == 3 * (4 - 1) + 1);
  CHECK(p.graph.adjacent(0, 1));
}

TEST_CASE("theta graphs") {
  CHECK(are_isomorphic(theta(2, 2), cycle(4)));
  CHECK(are_isomorphic(theta(3, 2), cycle(6)));
  CHECK(are_isomorphic(theta(2, 3), k_st(2, 3)));
  CHECK(code_of([] { theta(1, 2); }) == ErrorCode::Multigraph);
  CHECK(theta(1, 1).size() == 1);
}

TEST_CASE("attaching K_{t,t}") {
  const auto p3 = make_template(path(3), VertexSet(3, {0, 2}), VertexSet(3, {1}));
  const auto p3t = attach_ktt(p3, 1);
  CHECK(p3t.graph.order() == 5);
  CHECK(p3t.graph.size() == 6);
  const auto edge = make_template(path(2), VertexSet(2, {0}), VertexSet(2, {1}));
  CHECK(are_isomorphic(attach_ktt(edge, 1).graph, cycle(4)));
  for (const auto& h : {p3, edge, complete_bipartite(2, 3)}) {
    const int grown = attach_ktt(h, 2).graph.size() - h.graph.size();
    CHECK(grown == 4 + 2 * (h.a.count() + h.b.count()));
  }
  const auto parts = attach_ktt(p3, 1).parts();
  CHECK(is_bipartite_with(p3t.graph, parts));
}

TEST_CASE("attaching to rooted graphs") {
  const auto t31 = height_two_tree(3, 1);
  const auto grown = attach_ktt_rooted(t31, *two_colouring(t31.graph), 1);
  CHECK(grown.rooted.roots.count() == 5);
  const auto cherry = attach_ktt_rooted(rooted_path(2), *two_colouring(rooted_path(2).graph), 1);
  CHECK(cherry.rooted.graph.order() == 5);
  CHECK(cherry.rooted.roots.count() == 4);
  const auto same = attach_ktt_rooted(t31, *two_colouring(t31.graph), 0);
  CHECK(same.rooted.graph == t31.graph);
  CHECK(same.rooted.roots == t31.roots);
  const Bipartition wrong{VertexSet(7, {0, 1}), VertexSet::full(7) - VertexSet(7, {0, 1})};
  CHECK(code_of([&] { attach_ktt_rooted(t31, wrong, 1); }) == ErrorCode::NotBipartite);
}

TEST_CASE("neighbourhood hypergraphs") {
  const auto c4 = make_template(cycle(4), VertexSet(4, {0, 2}), VertexSet(4, {1, 3}));
  const auto f = neighborhood_hypergraph(c4);
  REQUIRE(f.edges.size() == 2);
  CHECK(f.edges[0] == VertexSet(4, {0, 2}));
  CHECK(f.edges[1] == VertexSet(4, {0, 2}));
  CHECK(f.max_edge_size() == 2);
  const auto s = make_template(star(3), VertexSet(4, {1, 2, 3}), VertexSet(4, {0}));
  const auto fs = neighborhood_hypergraph(s);
  REQUIRE(fs.edges.size() == 1);
  CHECK(fs.edges[0] == s.a);
  CHECK(fs.as_hypergraph().edges[0] == VertexSet(3, {0, 1, 2}));
  CHECK(code_of([] { make_template(cycle(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})); }) == ErrorCode::NotBipartite);
}

TEST_CASE("blowups") {
  const Hypergraph edge{2, {VertexSet(2, {0, 1})}};
  CHECK(blowup(edge, 2).edges.size() == 4);
  const Hypergraph triple{4, {VertexSet(4, {0, 1, 2}), VertexSet(4, {1, 2, 3})}};
  for (int m = 1; m <= 3; ++m) CHECK(blowup(triple, m).edges.size() == static_cast<std::size_t>(2 * m * m * m));
  const auto same = blowup(triple, 1);
  CHECK(same.edges == triple.edges);
  CHECK(blowup(triple, 3).uniformity() == 3);
  CHECK(blowup(triple, 2).parts[1] == VertexSet(8, {2, 3}));
  CHECK(code_of([&] { blowup(edge, 0); }) == ErrorCode::EmptyBlowup);
}
