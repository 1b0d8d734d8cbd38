// SPDX-License-Identifier: Apache-2.0
//
// Line-graph construction, root reconstruction, and the walk/path transfer
// between a root graph and its line graph.

#ifndef PG_LINEGRAPH_HPP
#define PG_LINEGRAPH_HPP

#include <optional>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

struct LineGraphResult {
  Graph lg;
  // lg vertex i corresponds to this edge of the input graph (u < v),
  // lexicographically ordered.
  std::vector<Edge> edge_of_vertex;
};

LineGraphResult line_graph(const Graph& g);

struct RootResult {
  Graph root;
  // Input vertex i corresponds to this edge of `root`.
  std::vector<Edge> edge_map;
};

// Root reconstruction: a graph R with L(R) equal to the input under
// edge_map, or nullopt when the input is not a line graph. The root is
// unique (Whitney) except for K3, whose root is fixed to the claw so that
// triangle-free roots are preferred.
std::optional<RootResult> root_lehot(const Graph& g);

// The triangle-free root construction for claw-free diamond-free graphs
// (maximal cliques become clique-type root vertices, single-clique graph
// vertices get a pendant-type root vertex). nullopt when the input has a
// claw or a diamond.
std::optional<RootResult> root_triangle_free(const Graph& g);

// If `edge_set` (edges of r) is the edge set of a simple path of r, return
// the corresponding induced path of L(r) (vertex ids of line_graph(r)),
// else nullopt.
std::optional<Path> walk_path_transfer(const Graph& r, const std::vector<Edge>& edge_set);

// True iff the input is the line graph of some bipartite graph.
bool is_line_graph_of_bipartite(const Graph& g);

}  // namespace pg

#endif  // PG_LINEGRAPH_HPP
