// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "pg/graph.hpp"
#include "pg/oracles.hpp"
#include "pg/structure.hpp"

using namespace pg;

namespace {

// All induced paths of g with at least one edge, as vertex sequences with
// front < back to avoid listing each path twice.
std::vector<std::vector<int>> all_induced_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.order();
  std::vector<int> cur;
  VertexSet used(n);
  auto dfs = [&](auto&& self, int v) -> void {
    if (cur.size() >= 2 && cur.front() < cur.back()) out.push_back(cur);
    for (int w = 0; w < n; ++w) {
      if (used.test(w) || !g.adjacent(v, w)) continue;
      bool induced = true;
      for (size_t i = 0; i + 1 < cur.size(); ++i)
        if (g.adjacent(cur[i], w)) { induced = false; break; }
      if (!induced) continue;
      used.set(w);
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      used.reset(w);
    }
  };
  for (int s = 0; s < n; ++s) {
    used.set(s);
    cur.push_back(s);
    dfs(dfs, s);
    cur.pop_back();
    used.reset(s);
  }
  return out;
}

bool t_complete(const Graph& g, int v, const VertexSet& t) {
  for (int u = t.first(); u >= 0; u = t.next(u))
    if (!g.adjacent(v, u)) return false;
  return true;
}

}  // namespace

TEST_CASE("rr_classify parity outcomes") {
  Graph c6 = cycle_graph(6);
  auto r = rr_classify(c6, VertexSet::of(6, {0}), Path{{1, 2, 3, 4, 5}});
  CHECK(r.tag == RROutcome::Tag::even_even);
  CHECK(r.t_edge_count == 0);
  CHECK(std::string(rr_tag_name(r.tag)) == "even-even");

  auto r2 = rr_classify(complete_graph(3), VertexSet::of(3, {0}), Path{{1, 2}});
  CHECK(r2.tag == RROutcome::Tag::odd_odd);
  CHECK(r2.t_edge_count == 1);
}

TEST_CASE("rr_classify leap") {
  // P = 0-1-2-3; u=4 sees {0,1,3}, v=5 sees {0,2,3}; u,v nonadjacent.
  Graph g(6, {{0, 1}, {1, 2}, {2, 3},
              {4, 0}, {4, 1}, {4, 3},
              {5, 0}, {5, 2}, {5, 3}});
  auto r = rr_classify(g, VertexSet::of(6, {4, 5}), Path{{0, 1, 2, 3}});
  REQUIRE(r.tag == RROutcome::Tag::leap);
  auto [u, v] = r.leap;
  CHECK(((u == 4 && v == 5) || (u == 5 && v == 4)));
  CHECK(!g.adjacent(u, v));
}

TEST_CASE("rr_classify hop") {
  // P = 0-1-2-3 of length 3; antipath 1-4-5-6-7-2 (length 5) with
  // interior {4,5,6,7} = T. The only leap candidates 7 and 4 are adjacent.
  Graph g(8, {{0, 1}, {1, 2}, {2, 3},
              {0, 4}, {0, 5}, {0, 6}, {0, 7},
              {3, 4}, {3, 5}, {3, 6}, {3, 7},
              {1, 5}, {1, 6}, {1, 7},
              {4, 6}, {4, 7}, {2, 4},
              {5, 7}, {2, 5}, {2, 6}});
  auto r = rr_classify(g, VertexSet::of(8, {4, 5, 6, 7}), Path{{0, 1, 2, 3}});
  REQUIRE(r.tag == RROutcome::Tag::hop);
  const auto& ap = r.hop_antipath;
  REQUIRE(ap.size() == 6);
  CHECK(((ap.front() == 1 && ap.back() == 2) || (ap.front() == 2 && ap.back() == 1)));
  // Antipath = induced path of the complement.
  CHECK(is_induced_path(g.complement(), ap));
  for (size_t i = 1; i + 1 < ap.size(); ++i)
    CHECK((ap[i] >= 4 && ap[i] <= 7));
}

TEST_CASE("rr_classify violation on an odd hole") {
  Graph c5 = cycle_graph(5);
  auto r = rr_classify(c5, VertexSet::of(5, {0}), Path{{1, 2, 3, 4}});
  CHECK(r.tag == RROutcome::Tag::violation);
}

TEST_CASE("rr_classify precondition checks") {
  Graph c6 = cycle_graph(6);
  // Not an induced path.
  CHECK_THROWS_AS(rr_classify(c6, VertexSet::of(6, {0}), Path{{1, 2, 3, 4, 5, 0}}),
                  std::invalid_argument);
  // T meets P.
  CHECK_THROWS_AS(rr_classify(c6, VertexSet::of(6, {1}), Path{{1, 2, 3}}),
                  std::invalid_argument);
  // Endpoint not T-complete.
  CHECK_THROWS_AS(rr_classify(c6, VertexSet::of(6, {0}), Path{{2, 3, 4}}),
                  std::invalid_argument);
  // T not anticonnected: two adjacent vertices both seen by 0 and 3.
  Graph g(5, {{1, 2}, {0, 1}, {0, 2}, {3, 1}, {3, 2}, {0, 4}, {4, 3}});
  CHECK_THROWS_AS(rr_classify(g, VertexSet::of(5, {1, 2}), Path{{0, 4, 3}}),
                  std::invalid_argument);
}

TEST_CASE("rr_classify is never violation on small Berge graphs") {
  OracleLimits lim;
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      if (!class_membership_bf(g, GraphClass::berge, lim)) continue;
      auto paths = all_induced_paths(g);
      for (int mask = 1; mask < (1 << n); ++mask) {
        VertexSet t(n);
        for (int v = 0; v < n; ++v)
          if (mask & (1 << v)) t.set(v);
        if (!is_anticonnected(g, t)) continue;
        for (const auto& vs : paths) {
          bool ok = true;
          for (int v : vs)
            if (t.test(v)) { ok = false; break; }
          if (!ok) continue;
          if (!t_complete(g, vs.front(), t) || !t_complete(g, vs.back(), t)) continue;
          auto r = rr_classify(g, t, Path{vs});
          CHECK(r.tag != RROutcome::Tag::violation);
          if (r.tag == RROutcome::Tag::even_even) {
            CHECK(Path{vs}.length() % 2 == 0);
            CHECK(r.t_edge_count % 2 == 0);
          }
          if (r.tag == RROutcome::Tag::odd_odd) {
            CHECK(Path{vs}.length() % 2 == 1);
            CHECK(r.t_edge_count % 2 == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("contract_even_pair basics") {
  Graph c6 = cycle_graph(6);
  auto [h, step] = contract_even_pair(c6, 0, 2);
  CHECK(h.order() == 5);
  CHECK(step.x == 0);
  CHECK(step.y == 2);
  REQUIRE((int)step.image.size() == 6);
  CHECK(step.image[0] == step.representative);
  CHECK(step.image[2] == step.representative);
  int rep = step.representative;
  // The merged vertex sees images of N(0) ∪ N(2) = {1,3,5}.
  CHECK(h.degree(rep) == 3);
  CHECK(h.adjacent(rep, step.image[1]));
  CHECK(h.adjacent(rep, step.image[3]));
  CHECK(h.adjacent(rep, step.image[5]));
  // Duplicate edges collapse: both 0 and 2 saw vertex 1.
  CHECK(h.size() == 5);
  CHECK_THROWS_AS(contract_even_pair(c6, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(contract_even_pair(c6, 0, 1), std::invalid_argument);
}

TEST_CASE("even-pair contraction preserves chromatic and clique numbers") {
  OracleLimits lim;
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.45);
  int contracted = 0;
  for (int it = 0; it < 400 && contracted < 60; ++it) {
    int n = 5 + (int)(rng() % 3);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.push_back({u, v});
    Graph g(n, es);
    if (!class_membership_bf(g, GraphClass::berge, lim)) continue;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (g.adjacent(x, y) || !is_even_pair_bf(g, x, y, lim)) continue;
        auto [h, step] = contract_even_pair(g, x, y);
        CHECK(chromatic_number_bf(h, lim) == chromatic_number_bf(g, lim));
        CHECK(clique_number_bf(h) == clique_number_bf(g));
        CHECK(class_membership_bf(h, GraphClass::berge, lim));
        ++contracted;
      }
  }
  CHECK(contracted >= 60);
}

TEST_CASE("enemy_status on fixed graphs") {
  // Two disjoint edges: no exiting path at all, hence enemy by convention.
  Graph g(4, {{0, 1}, {2, 3}});
  VertexSet k1 = VertexSet::of(4, {0, 1});
  VertexSet k2 = VertexSet::of(4, {2, 3});
  CHECK(enemy_status(g, k1, k2) == EnemyStatus::enemy);
  CHECK(std::string(enemy_status_name(EnemyStatus::enemy)) == "enemy");

  // Direct edge between the cliques: a single exiting path of length 1.
  Graph h(4, {{0, 1}, {2, 3}, {1, 2}});
  CHECK(enemy_status(h, k1, k2) == EnemyStatus::enemy);

  // Length-2 connection only: friendly.
  Graph f(5, {{0, 1}, {2, 3}, {1, 4}, {4, 2}});
  CHECK(enemy_status(f, VertexSet::of(5, {0, 1}), VertexSet::of(5, {2, 3})) ==
        EnemyStatus::friendly);

  // Shared vertex (length-0 path, even) plus an odd exiting path: mixed.
  Graph m(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 1}});
  CHECK(enemy_status(m, VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2})) ==
        EnemyStatus::mixed);

  CHECK_THROWS_AS(enemy_status(g, VertexSet::of(4, {0, 2}), k2), std::invalid_argument);
  CHECK_THROWS_AS(enemy_status(complete_graph(4), k1, k2, true, 3), std::length_error);
}

TEST_CASE("enemy_status induced vs simple path quantification") {
  // C6 plus chord: induced exiting paths between {0} and {3} are odd only
  // when the chord kills the even route.
  Graph g = cycle_graph(6);
  VertexSet k1 = VertexSet::of(6, {0});
  VertexSet k2 = VertexSet::of(6, {3});
  // Both 0-1-2-3 and 0-5-4-3 are odd: enemy under either quantification.
  CHECK(enemy_status(g, k1, k2, true) == EnemyStatus::enemy);
  CHECK(enemy_status(g, k1, k2, false) == EnemyStatus::enemy);
  // Add the chord {1,3}: the induced 0-2 paths stay even (0-1-2 and
  // 0-5-4-3-2) but the simple path 0-5-4-3-1-2 is odd.
  Graph h(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}});
  VertexSet k3 = VertexSet::of(6, {2});
  CHECK(enemy_status(h, k1, k3, true) == EnemyStatus::friendly);
  CHECK(enemy_status(h, k1, k3, false) == EnemyStatus::mixed);
}

TEST_CASE("clique_join") {
  Graph g(4, {{0, 1}, {2, 3}});
  VertexSet k1 = VertexSet::of(4, {0, 1});
  VertexSet k2 = VertexSet::of(4, {2, 3});
  Graph joined = clique_join(g, k1, k2);
  CHECK(joined.size() == 6);
  CHECK(joined.is_clique(VertexSet::of(4, {0, 1, 2, 3})));
  OracleLimits lim;
  CHECK(class_membership_bf(joined, GraphClass::berge, lim));

  Graph f(5, {{0, 1}, {2, 3}, {1, 4}, {4, 2}});
  CHECK_THROWS_AS(clique_join(f, VertexSet::of(5, {0, 1}), VertexSet::of(5, {2, 3})),
                  std::invalid_argument);
}

TEST_CASE("clique_join of enemy maximal cliques preserves perfection") {
  OracleLimits lim;
  std::mt19937 rng(9);
  std::bernoulli_distribution coin(0.5);
  int joined_count = 0;
  for (int it = 0; it < 300 && joined_count < 40; ++it) {
    int n = 6;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.push_back({u, v});
    Graph g(n, es);
    if (!class_membership_bf(g, GraphClass::berge, lim)) continue;
    // Enumerate maximal cliques naively.
    std::vector<VertexSet> maximal;
    for (int mask = 1; mask < (1 << n); ++mask) {
      VertexSet s(n);
      for (int v = 0; v < n; ++v)
        if (mask & (1 << v)) s.set(v);
      if (!g.is_clique(s)) continue;
      bool max = true;
      for (int v = 0; v < n && max; ++v) {
        if (s.test(v)) continue;
        VertexSet t = s;
        t.set(v);
        if (g.is_clique(t)) max = false;
      }
      if (max) maximal.push_back(s);
    }
    for (size_t i = 0; i < maximal.size(); ++i)
      for (size_t j = i + 1; j < maximal.size(); ++j) {
        if (maximal[i].intersects(maximal[j])) continue;
        if (enemy_status(g, maximal[i], maximal[j]) != EnemyStatus::enemy) continue;
        Graph h = clique_join(g, maximal[i], maximal[j]);
        CHECK(class_membership_bf(h, GraphClass::berge, lim));
        ++joined_count;
      }
  }
  CHECK(joined_count >= 40);
}
