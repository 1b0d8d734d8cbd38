// SPDX-License-Identifier: Apache-2.0

#include "pg/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pg {

const char* rr_tag_name(RROutcome::Tag tag) {
  switch (tag) {
    case RROutcome::Tag::even_even: return "even-even";
    case RROutcome::Tag::odd_odd: return "odd-odd";
    case RROutcome::Tag::leap: return "leap";
    case RROutcome::Tag::hop: return "hop";
    case RROutcome::Tag::violation: return "violation";
  }
  return "?";
}

namespace {

// Odd induced path between a and b in `h` using only `allowed` vertices
// (besides the endpoints). DFS; any witness will do.
bool odd_path_within(const Graph& h, int a, int b, const VertexSet& allowed,
                     std::vector<int>& out) {
  std::vector<int> path{a};
  VertexSet used(h.order());
  used.set(a);
  std::function<bool()> go = [&]() -> bool {
    int tip = path.back();
    if (tip == b) {
      if ((int)path.size() % 2 == 0 && is_induced_path(h, path)) {
        out = path;
        return true;
      }
      return false;
    }
    for (int w = h.neighbors(tip).first(); w != -1; w = h.neighbors(tip).next(w)) {
      if (used.test(w) || (w != b && !allowed.test(w))) continue;
      // Induced-ness: w may touch only the tip among path vertices.
      bool ok = true;
      for (int q : path)
        if (q != tip && h.adjacent(q, w)) { ok = false; break; }
      if (!ok) continue;
      used.set(w);
      path.push_back(w);
      if (go()) return true;
      path.pop_back();
      used.reset(w);
    }
    return false;
  };
  return go();
}

}  // namespace

RROutcome rr_classify(const Graph& g, const VertexSet& t, const Path& p) {
  int n = g.order();
  if (p.vertices.empty()) throw std::invalid_argument("empty path");
  if (!is_induced_path(g, p.vertices)) throw std::invalid_argument("p is not an induced path");
  if (t.empty() || !is_anticonnected(g, t))
    throw std::invalid_argument("t is not anticonnected");
  if (t.intersects(p.vertex_set(n))) throw std::invalid_argument("t meets the path");
  auto t_complete = [&](int v) { return t.is_subset_of(g.neighbors(v)); };
  if (!t_complete(p.vertices.front()) || !t_complete(p.vertices.back()))
    throw std::invalid_argument("path endpoints must be t-complete");

  RROutcome out;
  int len = p.length();
  int t_edges = 0;
  for (int i = 0; i + 1 < (int)p.vertices.size(); ++i)
    if (t_complete(p.vertices[i]) && t_complete(p.vertices[i + 1])) ++t_edges;
  if (len % 2 == 0 && t_edges % 2 == 0) {
    out.tag = RROutcome::Tag::even_even;
    out.t_edge_count = t_edges;
    return out;
  }
  if (len % 2 == 1 && t_edges % 2 == 1) {
    out.tag = RROutcome::Tag::odd_odd;
    out.t_edge_count = t_edges;
    return out;
  }
  if (len % 2 == 1 && len >= 3) {
    int x = p.vertices.front(), xp = p.vertices[1];
    int y = p.vertices.back(), yp = p.vertices[(int)p.vertices.size() - 2];
    VertexSet pset = p.vertex_set(n);
    VertexSet want_u = VertexSet::of(n, {x, xp, y});
    VertexSet want_v = VertexSet::of(n, {x, yp, y});
    for (int u = t.first(); u != -1; u = t.next(u)) {
      if ((g.neighbors(u) & pset) != want_u) continue;
      for (int v = t.first(); v != -1; v = t.next(v)) {
        if (v == u || g.adjacent(u, v)) continue;
        if ((g.neighbors(v) & pset) != want_v) continue;
        out.tag = RROutcome::Tag::leap;
        out.leap = {u, v};
        return out;
      }
    }
  }
  if (len == 3) {
    Graph co = g.complement();
    std::vector<int> anti;
    if (odd_path_within(co, p.vertices[1], p.vertices[2], t, anti)) {
      out.tag = RROutcome::Tag::hop;
      out.hop_antipath = anti;
      return out;
    }
  }
  out.tag = RROutcome::Tag::violation;
  return out;
}

std::pair<Graph, ContractionStep> contract_even_pair(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("contraction needs two distinct vertices");
  if (g.adjacent(x, y)) throw std::invalid_argument("cannot contract an adjacent pair");
  int n = g.order();
  ContractionStep step;
  step.x = x;
  step.y = y;
  step.image.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == y) continue;
    step.image[v] = next++;
  }
  step.image[y] = step.image[x];
  step.representative = step.image[x];
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = step.image[u], b = step.image[v];
    if (a == b) continue;  // impossible for a nonadjacent pair, kept for safety
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return {Graph(n - 1, edges), step};
}

const char* enemy_status_name(EnemyStatus s) {
  switch (s) {
    case EnemyStatus::enemy: return "enemy";
    case EnemyStatus::friendly: return "friend";
    case EnemyStatus::mixed: return "mixed";
  }
  return "?";
}

EnemyStatus enemy_status(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                         bool induced_paths, int guard) {
  int n = g.order();
  if (n > guard) throw std::length_error("enemy_status: graph exceeds guard");
  if (!g.is_clique(k1) || !g.is_clique(k2))
    throw std::invalid_argument("enemy_status: inputs must be cliques");
  bool seen_odd = false, seen_even = false;
  VertexSet both = k1 | k2;
  // Length-0 exiting paths: vertices shared by the two cliques.
  if (k1.intersects(k2)) seen_even = true;
  std::vector<int> path;
  VertexSet used(n);
  // DFS over exiting paths: start in k1, interior outside both cliques,
  // stop (and record parity) as soon as k2 is entered.
  std::function<void()> go = [&]() {
    if (seen_odd && seen_even) return;
    int tip = path.back();
    for (int w = g.neighbors(tip).first(); w != -1; w = g.neighbors(tip).next(w)) {
      if (used.test(w)) continue;
      if (induced_paths) {
        bool ok = true;
        for (int q : path)
          if (q != tip && g.adjacent(q, w)) { ok = false; break; }
        if (!ok) continue;
      }
      if (k2.test(w)) {
        ((int)path.size() % 2 == 1 ? seen_odd : seen_even) = true;
        if (seen_odd && seen_even) return;
        continue;
      }
      if (both.test(w)) continue;  // interior must avoid both cliques
      used.set(w);
      path.push_back(w);
      go();
      path.pop_back();
      used.reset(w);
    }
  };
  for (int a = k1.first(); a != -1 && !(seen_odd && seen_even); a = k1.next(a)) {
    path.assign(1, a);
    used = VertexSet(n);
    used.set(a);
    go();
  }
  if (seen_odd && seen_even) return EnemyStatus::mixed;
  if (seen_even) return EnemyStatus::friendly;
  return EnemyStatus::enemy;  // all odd, or no exiting path at all
}

Graph clique_join(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  if (enemy_status(g, k1, k2) != EnemyStatus::enemy)
    throw std::invalid_argument("clique_join: cliques are not enemies");
  std::vector<Edge> edges = g.edges();
  for (int u = k1.first(); u != -1; u = k1.next(u))
    for (int v = k2.first(); v != -1; v = k2.next(v)) {
      if (u == v || g.adjacent(u, v)) continue;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  return Graph(g.order(), edges);
}

}  // namespace pg
