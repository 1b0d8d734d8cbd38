// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pg/graph.hpp"
#include "pg/linegraph.hpp"
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

TEST_CASE("structure kind names round-trip") {
  for (StructureKind k : {StructureKind::odd_hole, StructureKind::long_prism,
                          StructureKind::lgsb_k4, StructureKind::diamond})
    CHECK(structure_kind_from_name(structure_kind_name(k)) == k);
  CHECK(!structure_kind_from_name("nonsense"));
}

TEST_CASE("find_structure_bf on named graphs") {
  auto oh = find_structure_bf(cycle_graph(5), StructureKind::odd_hole);
  REQUIRE(oh);
  CHECK(oh->vertices.count() == 5);
  CHECK(validate_witness(cycle_graph(5), *oh));
  CHECK(!find_structure_bf(cycle_graph(6), StructureKind::odd_hole));

  auto lh = find_structure_bf(cycle_graph(6), StructureKind::long_hole);
  REQUIRE(lh);
  CHECK(lh->vertices.count() == 6);
  CHECK(!find_structure_bf(cycle_graph(4), StructureKind::long_hole));

  auto ah = find_structure_bf(cycle_graph(7).complement(), StructureKind::long_antihole);
  REQUIRE(ah);
  CHECK(ah->vertices.count() == 7);

  auto pr = find_structure_bf(prism_graph(1, 1, 1), StructureKind::prism);
  REQUIRE(pr);
  CHECK(pr->vertices.count() == 6);
  CHECK(validate_witness(prism_graph(1, 1, 1), *pr));
  CHECK(!find_structure_bf(prism_graph(1, 1, 1), StructureKind::long_prism));
  auto lp = find_structure_bf(prism_graph(1, 1, 2), StructureKind::long_prism);
  REQUIRE(lp);
  CHECK(lp->vertices.count() == 7);

  auto py = find_structure_bf(pyramid_smallest(), StructureKind::pyramid);
  REQUIRE(py);
  CHECK(validate_witness(pyramid_smallest(), *py));

  // Odd prism: all three path lengths odd; 6-vertex prism qualifies.
  CHECK(find_structure_bf(prism_graph(1, 1, 1), StructureKind::odd_prism));
  CHECK(!find_structure_bf(prism_graph(1, 1, 1), StructureKind::even_prism));
  auto ep = find_structure_bf(prism_graph(2, 2, 2), StructureKind::even_prism);
  REQUIRE(ep);
  CHECK(ep->vertices.count() == 9);
  CHECK(!find_structure_bf(prism_graph(1, 2, 2), StructureKind::odd_prism));
  CHECK(!find_structure_bf(prism_graph(1, 2, 2), StructureKind::even_prism));

  CHECK(find_structure_bf(double_diamond_graph(), StructureKind::double_diamond));
  CHECK(find_structure_bf(l_k33_minus_e_graph(), StructureKind::l_k33_minus_e));
  CHECK(find_structure_bf(claw_graph(), StructureKind::claw));
  CHECK(find_structure_bf(diamond_graph(), StructureKind::diamond));

  // Line graphs of K4 subdivisions: the prism with one subdivided path is
  // the line graph of a nontrivial K4 subdivision? No: LGS-NTK4 needs four
  // triangles' worth of structure. L(K3,3) contains none; the 6-prism is
  // L(K4) itself (trivial), so not a witness.
  CHECK(!find_structure_bf(prism_graph(1, 1, 1), StructureKind::lgs_ntk4));
}

TEST_CASE("lgs oracle on genuine subdivision line graphs") {
  // Subdivide one edge of K4 once: the line graph is the smallest
  // nontrivial LGS (7 vertices).
  Graph k4sub(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
  Graph lg = line_graph(k4sub).lg;
  CHECK(lg.order() == 7);
  CHECK(enumerate_triangles(lg).size() == 6);
  CHECK(is_lgs_ntk4_shape(lg));
  CHECK(contains_structure(lg, StructureKind::lgs_ntk4));
  // That subdivision has a triangle in the root, so it is not bipartite.
  bool bip = true;
  CHECK(is_lgs_ntk4_shape(lg, &bip));
  CHECK(!bip);
  CHECK(!contains_structure(lg, StructureKind::lgsb_k4));
  // Fully even subdivision (every K4 edge subdivided once) is bipartite.
  Graph even_sub(10, {{0, 4}, {4, 1}, {0, 5}, {5, 2}, {0, 6}, {6, 3},
                      {1, 7}, {7, 2}, {1, 8}, {8, 3}, {2, 9}, {9, 3}});
  Graph lg2 = line_graph(even_sub).lg;
  bool bip2 = false;
  CHECK(is_lgs_ntk4_shape(lg2, &bip2));
  CHECK(bip2);
  CHECK(contains_structure(lg2, StructureKind::lgsb_k4));
  // A prism has two triangles; no LGS of a nontrivial K4 subdivision.
  CHECK(!contains_structure(prism_graph(1, 1, 2), StructureKind::lgs_ntk4));
  CHECK(!contains_structure(prism_graph(1, 1, 1), StructureKind::lgs_ntk4));
  // L(K4) itself is the trivial subdivision: excluded.
  CHECK(!contains_structure(line_graph(complete_graph(4)).lg, StructureKind::lgs_ntk4));
}

TEST_CASE("witness validation rejects wrong shapes") {
  Witness w;
  w.kind = StructureKind::odd_hole;
  w.vertices = VertexSet::of(6, {0, 1, 2, 3, 4});
  CHECK(!validate_witness(cycle_graph(6), w));
  w.vertices = VertexSet::of(5, {0, 1, 2, 3, 4});
  CHECK(validate_witness(cycle_graph(5), w));
}

TEST_CASE("exact invariants") {
  CHECK(chromatic_number_bf(cycle_graph(5)) == 3);
  CHECK(clique_number_bf(cycle_graph(5)) == 2);
  CHECK(independence_number_bf(cycle_graph(5)) == 2);
  CHECK(chromatic_number_bf(cycle_graph(7).complement()) == 4);
  CHECK(clique_number_bf(cycle_graph(7).complement()) == 3);
  CHECK(chromatic_number_bf(petersen_graph()) == 3);
  CHECK(clique_number_bf(complete_graph(6)) == 6);
  VertexSet mc = max_clique_bf(prism_graph(1, 1, 1));
  CHECK(mc.count() == 3);
  CHECK(prism_graph(1, 1, 1).is_clique(mc));
}

TEST_CASE("even pair and two-pair oracles") {
  Graph c6 = cycle_graph(6);
  CHECK(is_even_pair_bf(c6, 0, 2));
  CHECK(!is_even_pair_bf(c6, 0, 3));
  CHECK_THROWS_AS(is_even_pair_bf(c6, 0, 1), std::invalid_argument);
  CHECK(!is_even_pair_bf(cycle_graph(5), 0, 2));
  Graph c4 = cycle_graph(4);
  CHECK(is_two_pair_bf(c4, 0, 2));
  CHECK(!is_two_pair_bf(c6, 0, 2));
  // Disconnected pair: vacuously even and a 2-pair by the convention used.
  Graph two_k1(2, {});
  CHECK(is_even_pair_bf(two_k1, 0, 1));
  auto odd = odd_induced_path_bf(c6, 0, 3);
  REQUIRE(odd);
  CHECK(odd->length() % 2 == 1);
  CHECK(!odd_induced_path_bf(c6, 0, 2));
}

TEST_CASE("class membership oracle on named graphs") {
  CHECK(!class_membership_bf(cycle_graph(5), GraphClass::berge));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::berge));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::meyniel));
  CHECK(!class_membership_bf(cycle_graph(6), GraphClass::weakly_triangulated));
  CHECK(class_membership_bf(cycle_graph(4), GraphClass::weakly_triangulated));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::artemis));
  CHECK(!class_membership_bf(cycle_graph(6).complement(), GraphClass::artemis));
  CHECK(!class_membership_bf(cycle_graph(6).complement(), GraphClass::even_artemis));
  CHECK(class_membership_bf(prism_graph(2, 2, 2), GraphClass::even_artemis));
  CHECK(!class_membership_bf(prism_graph(2, 2, 2), GraphClass::artemis));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::bipartisan));
  CHECK(!class_membership_bf(double_diamond_graph(), GraphClass::bipartisan));
  CHECK(!class_membership_bf(prism_graph(1, 1, 2), GraphClass::bipartisan));
  CHECK(class_membership_bf(complete_graph(5), GraphClass::perfect));
  CHECK(!class_membership_bf(cycle_graph(7), GraphClass::perfect));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::quasi_parity));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::strict_quasi_parity));
  CHECK(class_membership_bf(cycle_graph(6), GraphClass::perfectly_contractile));
  // The double diamond is quasi-parity but not strict quasi-parity.
  CHECK(class_membership_bf(double_diamond_graph(), GraphClass::quasi_parity));
  CHECK(!class_membership_bf(double_diamond_graph(), GraphClass::strict_quasi_parity));
}

TEST_CASE("perfection equals Berge on small graphs") {
  std::mt19937 rng(3);
  for (int it = 0; it < 150; ++it) {
    Graph g = random_graph(7, 0.45, rng);
    CHECK(class_membership_bf(g, GraphClass::berge) ==
          class_membership_bf(g, GraphClass::perfect));
  }
}

TEST_CASE("hole through two vertices") {
  CHECK(has_hole_through_bf(cycle_graph(6), 0, 3));
  CHECK(!has_hole_through_bf(path_graph(6), 0, 3));
  Graph g = bull_graph();
  CHECK(!has_hole_through_bf(g, 0, 1));
}

TEST_CASE("canonical form and isomorphism") {
  Graph a = cycle_graph(5);
  Graph b(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(is_isomorphic(a, b));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(!is_isomorphic(cycle_graph(6), prism_graph(1, 1, 1)));
}

TEST_CASE("non-isomorphic enumeration counts") {
  CHECK(enumerate_nonisomorphic(1).size() == 1);
  CHECK(enumerate_nonisomorphic(2).size() == 2);
  CHECK(enumerate_nonisomorphic(3).size() == 4);
  CHECK(enumerate_nonisomorphic(4).size() == 11);
  CHECK(enumerate_nonisomorphic(5).size() == 34);
  CHECK(enumerate_nonisomorphic(6).size() == 156);
}

TEST_CASE("guards throw") {
  OracleLimits tiny;
  tiny.structure_guard = 4;
  CHECK_THROWS_AS(find_structure_bf(cycle_graph(5), StructureKind::odd_hole, tiny),
                  std::length_error);
  tiny.membership_guard = 4;
  CHECK_THROWS_AS(class_membership_bf(cycle_graph(5), GraphClass::berge, tiny),
                  std::length_error);
}

TEST_CASE("partitionable check") {
  auto rep = partitionable_check(cycle_graph(5));
  REQUIRE(rep);
  CHECK(rep->alpha == 2);
  CHECK(rep->omega == 2);
  CHECK(rep->per_vertex_incidence);
  CHECK(!partitionable_check(cycle_graph(6)));
  auto rep7 = partitionable_check(cycle_graph(7));
  REQUIRE(rep7);
  CHECK(rep7->omega == 2);
  CHECK(rep7->alpha == 3);
}

TEST_CASE("contains_structure agrees with subset oracle on random graphs") {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    Graph g = random_graph(8, 0.35, rng);
    for (StructureKind k : {StructureKind::odd_hole, StructureKind::long_hole,
                            StructureKind::prism, StructureKind::pyramid}) {
      CHECK(contains_structure(g, k) == find_structure_bf(g, k).has_value());
    }
  }
}
