// SPDX-License-Identifier: Apache-2.0

#include "pg/parity.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include "pg/linegraph.hpp"

namespace pg {

namespace {

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>,
    boost::property<boost::edge_weight_t, long long>>;

}  // namespace

std::optional<Matching> min_weight_perfect_matching(const Graph& g,
                                                    const std::map<Edge, long long>& weights) {
  int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return Matching{};
  // Transform w' = K - w with K > sum(w): maximum-weight matchings under
  // w' have maximum cardinality first, then minimum original weight.
  long long total = 0;
  for (auto& [e, w] : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    total += w;
  }
  long long big = total + 1;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) {
    auto it = weights.find({u, v});
    if (it == weights.end()) continue;  // absent edge
    boost::add_edge(u, v, big - it->second, bg);
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
  boost::maximum_weighted_matching(bg, &mate[0]);
  Matching m;
  for (int v = 0; v < n; ++v) {
    if (mate[v] == boost::graph_traits<BoostGraph>::null_vertex()) return std::nullopt;
    int u = (int)mate[v];
    if (u > v) {
      m.pairs.push_back({v, u});
      m.weight += weights.at({v, u});
    }
  }
  return m;
}

std::optional<Path> shortest_even_path(const Graph& g, int a, int b,
                                       const VertexSet& forbidden) {
  if (a == b) throw std::invalid_argument("endpoints must differ");
  if (forbidden.test(a) || forbidden.test(b)) throw std::invalid_argument("endpoint forbidden");
  int n = g.order();
  // Host = g minus forbidden. Two copies of the host; a lives only in copy
  // 1 and b only in copy 2; each other vertex gets a weight-0 twin edge.
  // An even simple a-b path of length 2k corresponds to a perfect matching
  // of weight 2k: path edges alternate between the copies starting in copy
  // 1 at a and ending in copy 2 at b, interior vertices use both copies,
  // everything off the path is matched to its twin.
  VertexSet host = VertexSet::full(n) - forbidden;
  std::vector<int> back = host.to_vector();
  int k = (int)back.size();
  std::vector<int> fwd(n, -1);
  for (int i = 0; i < k; ++i) fwd[back[i]] = i;
  // Ids: copy1 = 0..k-1, copy2 = k..2k-1; drop b from copy 1 and a from
  // copy 2 by simply never touching them (they stay isolated -> no perfect
  // matching would exist), so instead build a compacted graph.
  auto id1 = [&](int v) { return fwd[v]; };
  auto id2 = [&](int v) { return k + fwd[v]; };
  std::map<Edge, long long> weights;
  auto add = [&](int x, int y, long long w) {
    weights[{std::min(x, y), std::max(x, y)}] = w;
  };
  for (int v : back)
    if (v != a && v != b) add(id1(v), id2(v), 0);
  for (auto [u, v] : g.edges()) {
    if (!host.test(u) || !host.test(v)) continue;
    if (u != b && v != b) add(id1(u), id1(v), 1);
    if (u != a && v != a) add(id2(u), id2(v), 1);
  }
  // Remove the two unused copies (b in copy 1, a in copy 2) by remapping
  // to a graph without them.
  int total = 2 * k;
  std::vector<int> remap(total, -1);
  int cnt = 0;
  for (int i = 0; i < total; ++i) {
    if (i == id1(b) || i == id2(a)) continue;
    remap[i] = cnt++;
  }
  std::vector<Edge> redges;
  std::map<Edge, long long> rweights;
  for (auto& [e, w] : weights) {
    int x = remap[e.first], y = remap[e.second];
    if (x < 0 || y < 0) continue;
    Edge re{std::min(x, y), std::max(x, y)};
    redges.push_back(re);
    rweights[re] = w;
  }
  Graph mg(cnt, redges);
  auto m = min_weight_perfect_matching(mg, rweights);
  if (!m) return std::nullopt;
  // Recover the path: project non-twin matched edges back to g and walk
  // from a. Minimality forbids cycle components (each has weight >= 2).
  std::vector<int> unmap(cnt, -1);
  for (int i = 0; i < total; ++i)
    if (remap[i] >= 0) unmap[remap[i]] = i;
  std::vector<std::vector<int>> link(n);
  for (auto [x, y] : m->pairs) {
    int gx = unmap[x], gy = unmap[y];
    int vx = back[gx % k], vy = back[gy % k];
    if (vx == vy) continue;  // twin edge
    link[vx].push_back(vy);
    link[vy].push_back(vx);
  }
  Path p;
  p.kind = Path::Kind::simple;
  int cur = a, prev = -1;
  while (true) {
    p.vertices.push_back(cur);
    if (cur == b) break;
    int nxt = -1;
    for (int w : link[cur])
      if (w != prev) nxt = w;
    if (nxt == -1) return std::nullopt;  // should not happen
    prev = cur;
    cur = nxt;
  }
  return p;
}

EvenPairVerdict even_pair_in_line_graph(const Graph& g, int a, int b) {
  if (a == b || g.adjacent(a, b)) throw std::invalid_argument("need a nonadjacent pair");
  auto root = root_lehot(g);
  if (!root) throw std::invalid_argument("input is not a line graph");
  const Graph& r = root->root;
  int ua[2] = {root->edge_map[a].first, root->edge_map[a].second};
  int ub[2] = {root->edge_map[b].first, root->edge_map[b].second};
  std::optional<Path> best;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // Even walk in the root from one endpoint of edge a to one endpoint
      // of edge b, avoiding the two opposite endpoints.
      VertexSet forb(r.order());
      forb.set(ua[1 - i]);
      forb.set(ub[1 - j]);
      if (forb.test(ua[i]) || forb.test(ub[j])) continue;  // shared endpoints
      if (ua[i] == ub[j]) continue;  // zero-length walk is not usable
      auto c = shortest_even_path(r, ua[i], ub[j], forb);
      if (c && (!best || c->length() < best->length())) best = c;
    }
  if (!best) return std::monostate{};
  // Lift: the chain's edges plus edges a and b are the edge set of a
  // simple chain of the root, which induces an odd path of g.
  std::vector<Edge> chain;
  chain.push_back({std::min(root->edge_map[a].first, root->edge_map[a].second),
                   std::max(root->edge_map[a].first, root->edge_map[a].second)});
  for (int t = 0; t + 1 < (int)best->vertices.size(); ++t) {
    int x = best->vertices[t], y = best->vertices[t + 1];
    chain.push_back({std::min(x, y), std::max(x, y)});
  }
  chain.push_back({std::min(root->edge_map[b].first, root->edge_map[b].second),
                   std::max(root->edge_map[b].first, root->edge_map[b].second)});
  // Map root edges to g's vertex ids through edge_map.
  std::map<Edge, int> of_edge;
  for (int v = 0; v < g.order(); ++v) of_edge[root->edge_map[v]] = v;
  Path lifted;
  lifted.kind = Path::Kind::induced;
  for (auto e : chain) {
    auto it = of_edge.find(e);
    if (it == of_edge.end()) throw std::logic_error("chain edge missing from line graph");
    lifted.vertices.push_back(it->second);
  }
  if (!is_induced_path(g, lifted.vertices) || lifted.length() % 2 == 0)
    throw std::logic_error("lifted path is not an odd induced path");
  return lifted;
}

std::optional<std::pair<int, int>> find_two_pair(const Graph& g) {
  int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      VertexSet keep = VertexSet::full(n) - (g.neighbors(x) & g.neighbors(y));
      // x and y must fall in distinct components of g[keep].
      bool separated = true;
      for (const auto& comp : components(g, keep))
        if (comp.test(x) && comp.test(y)) separated = false;
      if (separated) return std::make_pair(x, y);
    }
  return std::nullopt;
}

}  // namespace pg
