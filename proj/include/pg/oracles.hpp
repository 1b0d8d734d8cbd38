// SPDX-License-Identifier: Apache-2.0
//
// Exponential-time ground truth: exhaustive structure detectors, exact
// invariants, class membership by definition, and non-isomorphic graph
// enumeration. Every fast algorithm in this library is tested against this
// module. Everything here is guarded by explicit size caps.

#ifndef PG_ORACLES_HPP
#define PG_ORACLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

enum class StructureKind {
  odd_hole,
  long_hole,
  long_antihole,
  prism,
  long_prism,
  even_prism,
  odd_prism,
  pyramid,
  lgs_ntk4,   // line graph of a nontrivial K4 subdivision
  lgsb_k4,    // line graph of a nontrivial bipartite K4 subdivision
  double_diamond,
  l_k33_minus_e,
  claw,
  diamond,
};

const char* structure_kind_name(StructureKind k);
std::optional<StructureKind> structure_kind_from_name(const std::string& name);

struct Witness {
  StructureKind kind;
  VertexSet vertices;
  // Role label -> vertex list, e.g. "triangle0", "path1", "apex", "hole".
  std::map<std::string, std::vector<int>> roles;
};

// Checks that g[w.vertices] really is the claimed structure (role-aware
// where roles are present, shape-only otherwise).
bool validate_witness(const Graph& g, const Witness& w);

// Shape tests on whole graphs (used by the validator and the subset scans).
// Each fills `out` with roles when a non-null pointer is given.
bool is_hole_graph(const Graph& g);            // g itself is a chordless cycle >= 4
bool is_prism_shape(const Graph& g, int path_len[3] = nullptr);
bool is_pyramid_shape(const Graph& g);
bool is_lgs_ntk4_shape(const Graph& g, bool* bipartite_root = nullptr);

struct OracleLimits {
  int structure_guard = 16;   // find_structure_bf subset scans
  int membership_guard = 10;  // class_membership_bf
  int partitionable_guard = 14;
};

// Exhaustive minimal witness search: smallest vertex count, ties broken by
// lexicographically least vertex set. Throws std::length_error above guard.
std::optional<Witness> find_structure_bf(const Graph& g, StructureKind kind,
                                         const OracleLimits& lim = {});

// Presence-only structural search that stays feasible on large sparse
// graphs whose triangles are few (the hardness-gadget outputs): anchored on
// triangles for the prism/pyramid/LGS families, induced-cycle DFS for the
// hole families. No minimality promise.
bool contains_structure(const Graph& g, StructureKind kind);

// Is there a hole (chordless cycle, >= 4 vertices) through both a and b?
bool has_hole_through_bf(const Graph& g, int a, int b);

int chromatic_number_bf(const Graph& g, const OracleLimits& lim = {});
int clique_number_bf(const Graph& g);
int independence_number_bf(const Graph& g);
VertexSet max_clique_bf(const Graph& g);

// True iff every induced x-y path has even length. x,y must be distinct and
// nonadjacent (throws otherwise).
bool is_even_pair_bf(const Graph& g, int x, int y, const OracleLimits& lim = {});
// Two-pair: every induced x-y path has length exactly 2 (vacuously true
// when there is no induced path at all).
bool is_two_pair_bf(const Graph& g, int x, int y);
// Any induced x-y path of odd length, if one exists.
std::optional<Path> odd_induced_path_bf(const Graph& g, int x, int y);

enum class GraphClass {
  berge,
  perfect,
  meyniel,
  weakly_triangulated,
  quasi_parity,
  strict_quasi_parity,
  perfectly_contractile,
  artemis,
  even_artemis,
  bipartisan,
};

const char* graph_class_name(GraphClass c);
std::optional<GraphClass> graph_class_from_name(const std::string& name);

bool class_membership_bf(const Graph& g, GraphClass c, const OracleLimits& lim = {});

// Canonical form: the lexicographically minimal upper-triangle adjacency
// bit-string over all vertex permutations (row-major (i,j), i<j), packed
// into bytes. Feasible for n <= 10 or so.
std::vector<uint8_t> canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Exactly one representative per isomorphism class, n <= 7.
std::vector<Graph> enumerate_nonisomorphic(int n);

struct PartitionableReport {
  int alpha = 0, omega = 0;
  int num_omega_cliques = 0, num_alpha_stables = 0;
  bool per_vertex_incidence = false;  // every vertex in exactly omega cliques / alpha stables
  bool clique_stable_pairing = false; // each clique disjoint from exactly one stable
  bool unique_colorings = false;      // G minus v has a unique omega-coloring
};

std::optional<PartitionableReport> partitionable_check(const Graph& g,
                                                       const OracleLimits& lim = {});

}  // namespace pg

#endif  // PG_ORACLES_HPP
