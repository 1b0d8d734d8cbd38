// SPDX-License-Identifier: Apache-2.0

#include "pg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pg {

void Graph::add_edge_internal(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

Graph graph_from_adjacency(int n, const std::vector<VertexSet>& rows) {
  Graph g(n);
  g.adj_ = rows;
  int m2 = 0;
  for (const auto& r : rows) m2 += r.count();
  g.m_ = m2 / 2;
  return g;
}

Graph Graph::complement() const {
  std::vector<VertexSet> rows(n_, VertexSet(n_));
  for (int v = 0; v < n_; ++v) {
    rows[v] = ~adj_[v];
    rows[v].reset(v);
  }
  return graph_from_adjacency(n_, rows);
}

Graph Graph::induced(const VertexSet& vs, std::vector<int>* back) const {
  std::vector<int> old_ids = vs.to_vector();
  int k = (int)old_ids.size();
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(old_ids[i], old_ids[j])) h.add_edge_internal(i, j);
  if (back) *back = std::move(old_ids);
  return h;
}

bool Graph::is_clique(const VertexSet& vs) const {
  for (int u = vs.first(); u >= 0; u = vs.next(u)) {
    VertexSet rest = vs;
    rest.reset(u);
    if (!rest.is_subset_of(adj_[u])) return false;
  }
  return true;
}

bool Graph::is_stable(const VertexSet& vs) const {
  for (int u = vs.first(); u >= 0; u = vs.next(u))
    if (adj_[u].intersects(vs)) return false;
  return true;
}

VertexSet Graph::common_neighbors(const VertexSet& vs) const {
  VertexSet r = VertexSet::full(n_);
  for (int u = vs.first(); u >= 0; u = vs.next(u)) r &= adj_[u];
  r -= vs;
  return r;
}

bool is_simple_path(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  VertexSet seen(g.order());
  for (int v : vs) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  return true;
}

bool is_induced_path(const Graph& g, const std::vector<int>& vs) {
  if (!is_simple_path(g, vs)) return false;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 2; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

std::optional<Path> shortest_path_avoiding(const Graph& g, int s, int t,
                                           const VertexSet& forbidden) {
  int n = g.order();
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::out_of_range("vertex id out of range");
  if (forbidden.test(s) || forbidden.test(t)) throw std::invalid_argument("endpoint is forbidden");
  std::vector<int> parent(n, -2);
  parent[s] = -1;
  std::queue<int> q;
  q.push(s);
  while (!q.empty() && parent[t] == -2) {
    int u = q.front();
    q.pop();
    VertexSet next = g.neighbors(u) - forbidden;
    for (int v = next.first(); v >= 0; v = next.next(v)) {
      if (parent[v] != -2) continue;
      parent[v] = u;
      q.push(v);
    }
  }
  if (parent[t] == -2) return std::nullopt;
  Path p;
  for (int v = t; v != -1; v = parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  p.kind = Path::Kind::induced;  // a chord would contradict BFS minimality
  return p;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet todo = within;
  while (!todo.empty()) {
    VertexSet comp(g.order());
    std::vector<int> stack{todo.first()};
    comp.set(stack[0]);
    todo.reset(stack[0]);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u) & todo;
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        comp.set(v);
        todo.reset(v);
        stack.push_back(v);
      }
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within) {
  return components(g.complement(), within);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return components(g, VertexSet::full(g.order())).size() == 1;
}

bool is_anticonnected(const Graph& g, const VertexSet& within) {
  if (within.empty()) return false;
  return anticomponents(g, within).size() == 1;
}

bool is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const VertexSet& nb = g.neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (int w = common.next(v); w >= 0; w = common.next(w)) out.push_back({u, v, w});
    }
  }
  return out;
}

// --- text formats -----------------------------------------------------

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  int n = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "n") {
      if (!(ls >> n) || n < 0) throw std::invalid_argument("bad order header");
      have_n = true;
      continue;
    }
    int u = std::stoi(tok), v;
    if (!(ls >> v)) throw std::invalid_argument("edge line needs two ids");
    edges.push_back({u, v});
    n = have_n ? n : std::max({n, u + 1, v + 1});
  }
  return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

// --- named graphs ------------------------------------------------------

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int p, int q) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.push_back({i, p + j});
  return Graph(p + q, e);
}

Graph claw_graph() { return complete_bipartite(1, 3); }

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph bull_graph() {
  // Triangle 0,1,2 with pendant horns 3-0 and 4-1.
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
}

Graph house_graph() {
  // C5 0-1-2-3-4-0 plus the chord 1-4 ("roof" on the triangle 0,1,4).
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});          // outer C5
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    e.push_back({i, 5 + i});                // spokes
  }
  return Graph(10, e);
}

Graph prism_graph(int l1, int l2, int l3) {
  // Corners a_i = 0,1,2 and b_i = 3,4,5; interior vertices appended after.
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6;
  int len[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    int prev = i;
    for (int k = 1; k < len[i]; ++k) {
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, 3 + i});
  }
  return Graph(next, e);
}

Graph pyramid_smallest() {
  // Apex 0; triangle 1,2,3; paths 0-1, 0-4-2, 0-5-6-3... the smallest
  // pyramid has 7 vertices: one path of length 1 and two of length 2.
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {0, 1}, {0, 4}, {4, 2}, {0, 5}, {5, 6}, {6, 3}});
}

// Both eight-vertex graphs below are the two smallest "bicographs":
// {c1,c2,d1,d2} = {4,5,6,7} induces a C4; each a_i sees one edge of that C4
// and b_i the opposite edge; a_i b_i are edges and there is no other edge
// between {a1,b1} and {a2,b2}. Same C4 edge for a1 and a2 gives the double
// diamond, incident edges give L(K3,3 minus an edge).
Graph double_diamond_graph() {
  // a1=0 a2=1 b1=2 b2=3 c1=4 c2=5 d1=6 d2=7
  return Graph(8, {{0, 2}, {1, 3},                  // a_i b_i
                   {4, 5}, {5, 6}, {6, 7}, {7, 4},  // C4
                   {0, 4}, {0, 5}, {2, 6}, {2, 7},  // a1 sees c1c2, b1 sees d1d2
                   {1, 4}, {1, 5}, {3, 6}, {3, 7}});
}

Graph l_k33_minus_e_graph() {
  return Graph(8, {{0, 2}, {1, 3},
                   {4, 5}, {5, 6}, {6, 7}, {7, 4},
                   {0, 4}, {0, 5}, {2, 6}, {2, 7},  // a1 sees c1c2, b1 sees d1d2
                   {1, 5}, {1, 6}, {3, 7}, {3, 4}});  // a2 sees c2d1, b2 sees d2c1
}

Graph k33_minus_e_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(i == 2 && j == 2)) e.push_back({i, 3 + j});
  return Graph(6, e);
}

Graph line_graph_k33() {
  // Vertices = pairs (i,j); adjacency = sharing a side.
  std::vector<Edge> e;
  auto id = [](int i, int j) { return 3 * i + j; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          int a = id(i, j), b = id(k, l);
          if (a < b && (i == k || j == l)) e.push_back({a, b});
        }
  return Graph(9, e);
}

}  // namespace pg
