// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pg/graph.hpp"
#include "pg/oracles.hpp"

using namespace pg;

namespace {
Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}
}  // namespace

TEST_CASE("vertexset basics") {
  VertexSet s(70);
  CHECK(s.empty());
  s.set(0);
  s.set(63);
  s.set(64);
  s.set(69);
  CHECK(s.count() == 4);
  CHECK(s.test(63));
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 63);
  CHECK(s.next(64) == 69);
  CHECK(s.next(69) == -1);
  VertexSet t = VertexSet::of(70, {63, 5});
  CHECK((s & t).count() == 1);
  CHECK((s | t).count() == 5);
  CHECK((s - t) == VertexSet::of(70, {0, 64, 69}));
  CHECK(t.is_subset_of(s | t));
  CHECK(VertexSet::full(70).count() == 70);
  CHECK((~t).count() == 68);
}

TEST_CASE("graph construction and basic queries") {
  Graph g = cycle_graph(5);
  CHECK(g.order() == 5);
  CHECK(g.size() == 5);
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(3) == 2);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::out_of_range);
  // Duplicate edges collapse.
  Graph h(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(h.size() == 1);
}

TEST_CASE("complement and induced subgraph") {
  Graph g = path_graph(4);
  Graph gc = g.complement();
  CHECK(gc.size() == 6 - 3);
  CHECK(gc.adjacent(0, 2));
  CHECK(!gc.adjacent(0, 1));
  std::vector<int> back;
  Graph sub = g.induced(VertexSet::of(4, {0, 1, 3}), &back);
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 1);
  CHECK(back == std::vector<int>{0, 1, 3});
}

TEST_CASE("clique, stable, common neighbors") {
  Graph g = complete_graph(4);
  CHECK(g.is_clique(VertexSet::full(4)));
  CHECK(!g.is_stable(VertexSet::of(4, {0, 1})));
  Graph c5 = cycle_graph(5);
  CHECK(c5.is_stable(VertexSet::of(5, {0, 2})));
  CHECK(c5.common_neighbors(VertexSet::of(5, {0, 2})) == VertexSet::of(5, {1}));
}

TEST_CASE("paths and shortest_path_avoiding") {
  Graph g = cycle_graph(6);
  CHECK(is_induced_path(g, {0, 1, 2, 3}));
  CHECK(!is_induced_path(g, {0, 1, 2, 3, 4, 5}));  // chord 5-0
  CHECK(is_simple_path(g, {0, 1, 2}));
  auto p = shortest_path_avoiding(g, 0, 3, VertexSet(6));
  REQUIRE(p);
  CHECK(p->length() == 3);
  auto q = shortest_path_avoiding(g, 0, 3, VertexSet::of(6, {1, 2}));
  REQUIRE(q);
  CHECK(q->vertices == std::vector<int>{0, 5, 4, 3});
  CHECK(!shortest_path_avoiding(g, 0, 3, VertexSet::of(6, {1, 5})));
  CHECK_THROWS_AS(shortest_path_avoiding(g, 0, 3, VertexSet::of(6, {0})),
                  std::invalid_argument);
  // Shortest paths in the restricted graph are induced.
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    Graph r = random_graph(9, 0.3, rng);
    auto sp = shortest_path_avoiding(r, 0, 8, VertexSet::of(9, {4}));
    if (sp) CHECK(is_induced_path(r, sp->vertices));
  }
}

TEST_CASE("components and connectivity") {
  Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
  auto comps = components(g, VertexSet::full(6));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet::of(6, {0, 1}));
  CHECK(comps[1] == VertexSet::of(6, {2, 3, 4}));
  CHECK(comps[2] == VertexSet::of(6, {5}));
  CHECK(!is_connected(g));
  CHECK(is_connected(cycle_graph(4)));
  CHECK(is_anticonnected(complete_graph(3).complement(), VertexSet::full(3)));
  CHECK(!is_anticonnected(complete_graph(3), VertexSet::full(3)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(!is_bipartite(cycle_graph(5)));
  auto acomps = anticomponents(complete_bipartite(2, 3), VertexSet::full(5));
  CHECK(acomps.size() == 2);
}

TEST_CASE("triangle enumeration") {
  Graph g = complete_graph(4);
  CHECK(enumerate_triangles(g).size() == 4);
  CHECK(enumerate_triangles(cycle_graph(6)).empty());
  auto tri = enumerate_triangles(bull_graph());
  REQUIRE(tri.size() == 1);
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(42);
  for (int n : {1, 2, 5, 8, 13, 27, 70}) {
    Graph g = random_graph(n, 0.4, rng);
    Graph h = parse_graph6(serialize_graph6(g));
    CHECK(g == h);
  }
  CHECK(parse_graph6(">>graph6<<" + serialize_graph6(cycle_graph(5))) == cycle_graph(5));
  CHECK_THROWS(parse_graph6("@@@@"));
}

TEST_CASE("edge list round trip") {
  Graph g = petersen_graph();
  CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  Graph h = parse_edge_list("n 4\n# comment\n0 1\n\n2 3\n");
  CHECK(h.order() == 4);
  CHECK(h.size() == 2);
}

TEST_CASE("named graphs") {
  CHECK(petersen_graph().size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
  CHECK(claw_graph().order() == 4);
  CHECK(diamond_graph().size() == 5);
  CHECK(bull_graph().order() == 5);
  CHECK(house_graph().size() == 6);
  Graph pr = prism_graph(1, 1, 1);
  CHECK(pr.order() == 6);
  CHECK(pr.size() == 9);
  CHECK(prism_graph(1, 2, 2).order() == 8);
  CHECK(pyramid_smallest().order() == 7);
  CHECK(double_diamond_graph().order() == 8);
  CHECK(l_k33_minus_e_graph().order() == 8);
  CHECK(line_graph_k33().order() == 9);
  CHECK(k33_minus_e_graph().size() == 8);
}

TEST_CASE("self-complementary named graphs") {
  CHECK(is_isomorphic(double_diamond_graph(), double_diamond_graph().complement()));
  CHECK(is_isomorphic(l_k33_minus_e_graph(), l_k33_minus_e_graph().complement()));
  CHECK(is_isomorphic(line_graph_k33(), line_graph_k33().complement()));
  CHECK(is_isomorphic(bull_graph(), bull_graph().complement()));
  CHECK(is_isomorphic(cycle_graph(5), cycle_graph(5).complement()));
}
