// SPDX-License-Identifier: Apache-2.0
//
// Undirected simple loop-free graph over dense vertex ids, plus the basic
// queries and traversals everything else builds on. Graph values are
// immutable after construction and safe to share across threads.

#ifndef PG_GRAPH_HPP
#define PG_GRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/vertexset.hpp"

namespace pg {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n) : n_(n), m_(0), adj_(n, VertexSet(n)) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> r;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) r.push_back({u, v});
    return r;
  }

  Graph complement() const;

  // Induced subgraph on `vs`; `back` (if non-null) receives the new-id ->
  // old-id map (ascending old ids).
  Graph induced(const VertexSet& vs, std::vector<int>* back = nullptr) const;

  // True iff every two distinct members of `vs` are adjacent.
  bool is_clique(const VertexSet& vs) const;
  // True iff no two members of `vs` are adjacent.
  bool is_stable(const VertexSet& vs) const;
  // Vertices adjacent to every member of `vs` (members themselves excluded).
  VertexSet common_neighbors(const VertexSet& vs) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_, m_;
  std::vector<VertexSet> adj_;

  void add_edge_internal(int u, int v);

  friend Graph graph_from_adjacency(int n, const std::vector<VertexSet>& rows);
};

// A walk with distinct vertices; `induced` additionally means no chords.
struct Path {
  enum class Kind { simple, induced };
  std::vector<int> vertices;
  Kind kind = Kind::simple;

  int length() const { return (int)vertices.size() - 1; }
  VertexSet vertex_set(int n) const {
    VertexSet s(n);
    for (int v : vertices) s.set(v);
    return s;
  }
};

// True iff `vs` lists an induced path of g in order.
bool is_induced_path(const Graph& g, const std::vector<int>& vs);
// True iff `vs` lists distinct vertices with consecutive ones adjacent.
bool is_simple_path(const Graph& g, const std::vector<int>& vs);

// BFS-shortest s-t path inside g minus `forbidden` (s,t must not be
// forbidden). The result is induced in the restricted subgraph: any chord
// would yield a shorter path. Deterministic: smallest-id parents.
std::optional<Path> shortest_path_avoiding(const Graph& g, int s, int t,
                                           const VertexSet& forbidden);

// Connected components of g[within], each a VertexSet; ordered by smallest
// member. Anticomponents are components of the complement.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);
bool is_anticonnected(const Graph& g, const VertexSet& within);
bool is_bipartite(const Graph& g);

// All triangles, lexicographically ordered triples u<v<w.
std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g);

// --- text formats -----------------------------------------------------

// graph6 (McKay). parse accepts an optional ">>graph6<<" header and
// validates padding; serialize emits no header.
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// One "u v" pair per line, 0-based; blank lines and lines starting with '#'
// are ignored. Vertex count = 1 + max id unless a "n N" header line appears.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// --- named graphs used throughout the tests ---------------------------

Graph cycle_graph(int n);
Graph path_graph(int n);       // n vertices, n-1 edges
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int p, int q);
Graph claw_graph();            // K_{1,3}
Graph diamond_graph();         // K4 minus an edge
Graph bull_graph();            // triangle with two pendant horns
Graph house_graph();           // C5 plus one chord
Graph petersen_graph();
// Prism: two triangles {a1,a2,a3},{b1,b2,b3} joined by paths of lengths
// l1,l2,l3 (each >= 1), no other edges.
Graph prism_graph(int l1, int l2, int l3);
Graph pyramid_smallest();      // 7 vertices
Graph double_diamond_graph();  // 8 vertices, self-complementary
Graph l_k33_minus_e_graph();   // line graph of K3,3 minus an edge
Graph k33_minus_e_graph();
Graph line_graph_k33();

}  // namespace pg

#endif  // PG_GRAPH_HPP
