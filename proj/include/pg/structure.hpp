// SPDX-License-Identifier: Apache-2.0
//
// Structural theorems in executable form: the path/anticonnected-set
// outcome classifier, even-pair contraction, and enemy-clique operations.

#ifndef PG_STRUCTURE_HPP
#define PG_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

// Outcome of classifying an induced path P whose endpoints are complete
// to an anticonnected set T (vertex-disjoint from P). A T-edge of P is
// an edge of P with both endpoints T-complete.
struct RROutcome {
  enum class Tag { even_even, odd_odd, leap, hop, violation };
  Tag tag = Tag::violation;
  // Parity tags: number of T-edges on P.
  int t_edge_count = -1;
  // Leap: nonadjacent u,v in T with N(u) ∩ V(P) = {x,x',y} and
  // N(v) ∩ V(P) = {x,y',y}, where P = x - x' - ... - y' - y.
  std::pair<int, int> leap{-1, -1};
  // Hop: P has length 3 and its interior vertices are the ends of an
  // odd antipath whose interior lies in T. Stored as the antipath's
  // vertex sequence (an induced path of the complement).
  std::vector<int> hop_antipath;
};

const char* rr_tag_name(RROutcome::Tag tag);

// First matching outcome in the fixed order even-even, odd-odd, leap,
// hop; `violation` only when none holds. Throws std::invalid_argument
// on precondition breach (p not an induced path, g[t] not anticonnected,
// t meets V(p), or an endpoint of p is not t-complete).
RROutcome rr_classify(const Graph& g, const VertexSet& t, const Path& p);

/// One even-pair contraction step: x and y merged into a single vertex
// adjacent to N(x) ∪ N(y). `image[old]` gives the new id of each old
// vertex; both x and y map to the representative.
struct ContractionStep {
  int x = -1;
  int y = -1;
  int representative = -1;
  std::vector<int> image;
};

struct ContractionTrace {
  std::vector<ContractionStep> steps;
  // Original vertex of the first graph -> vertex of the final graph.
  std::vector<int> representative;
};

// Contract the nonadjacent pair {x,y}. Parity of the pair is NOT
/// checked here. Throws std::invalid_argument if x == y or adjacent.
std::pair<Graph, ContractionStep> contract_even_pair(const Graph& g, int x, int y);

enum class EnemyStatus { enemy, friendly, mixed };

const char* enemy_status_name(EnemyStatus s);

// Classify two cliques by the parities of their exiting paths (one end
// in each clique, interior outside both; a shared vertex counts as a
// length-0 path). All odd -> enemy, all even -> friendly, otherwise
// mixed; no exiting path at all -> enemy (vacuous). Paths are induced
// by default; set induced_paths=false to quantify over simple paths.
// Throws std::invalid_argument if k1 or k2 is not a clique and
// std::length_error when g.order() exceeds `guard`.
EnemyStatus enemy_status(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                         bool induced_paths = true, int guard = 14);

// Add every edge between k1 and k2. Requires enemy_status == enemy
// (checked; throws std::invalid_argument otherwise).
Graph clique_join(const Graph& g, const VertexSet& k1, const VertexSet& k2);

}  // namespace pg

#endif  // PG_STRUCTURE_HPP
