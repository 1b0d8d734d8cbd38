// SPDX-License-Identifier: Apache-2.0
//
// Coloring by repeated even-pair contraction: interesting-set growth,
// outgoing-path search, special even pairs, and the robust coloring
// driver that certifies its own output.

#ifndef PG_ARTEMIS_HPP
#define PG_ARTEMIS_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pg/graph.hpp"
#include "pg/structure.hpp"

namespace pg {

// Result of the interesting-set search: a maximal interesting set T
// (g[T] anticonnected, common neighborhood C(T) not a clique), or a
// special even pair found early, or "g is a clique".
struct InterestingSetResult {
  enum class Kind { interesting_set, special_pair, clique };
  Kind kind = Kind::clique;
  VertexSet t;                 // interesting_set
  std::pair<int, int> pair{-1, -1};  // special_pair
};

InterestingSetResult find_interesting_set(const Graph& g);

// Common neighborhood of t (vertices outside t adjacent to all of t).
VertexSet common_neighborhood(const Graph& g, const VertexSet& t);

// True iff some induced path joins two nonadjacent C(T) vertices with
// all interior vertices outside T ∪ C(T). Expects t maximal interesting
// in connected g (not checked).
bool has_outgoing_path(const Graph& g, const VertexSet& t);

// Minimum-length outgoing path; ties broken by the lexicographically
// least endpoint pair. Throws std::logic_error when none exists.
Path shortest_outgoing_path(const Graph& g, const VertexSet& t);

// Special even pair from a minimal outgoing path z = a - z1...zn - b:
// A (resp. B) collects the C(T) vertices seeing exactly z1 (resp. zn)
// of the interior; a maximal element of each side is returned. Throws
// std::invalid_argument when A or B is empty (non-Artemis input).
std::pair<int, int> special_even_pair_from_z(const Graph& g, const VertexSet& t,
                                             const Path& z);

// Recursive combine: returns a special even pair, or nullopt when g is
// a clique. On non-Artemis inputs the pair may fail to be even; callers
// verify downstream.
std::optional<std::pair<int, int>> special_even_pair(const Graph& g);

struct Coloring {
  std::vector<int> color;
  int palette = 0;
};

struct ColorResult {
  Coloring coloring;
  VertexSet clique;
  bool optimal_certified = false;  // palette == clique size, coloring proper
  ContractionTrace trace;
  // Set when a contraction pair failed the brute-force even-pair check
  // (only attempted while the current graph has at most verify_guard
  // vertices; 0 disables the check).
  bool pair_check_failed = false;
};

// Generic contraction driver: repeatedly asks `next_pair` for a
// nonadjacent pair to contract (nullopt = stop), then back-propagates
// colors through the trace and recovers a clique by de-contraction.
// optimal_certified is true only when the final graph was a clique,
// the coloring is proper and the palette matches a genuine clique.
ColorResult color_by_contraction(
    const Graph& g,
    const std::function<std::optional<std::pair<int, int>>(const Graph&)>& next_pair,
    int verify_guard = 0);

// Color by repeated special-even-pair contraction; recover a maximum
// clique by de-contraction. Robust: on any input, optimal_certified is
// true only when palette size equals the size of a genuine clique.
ColorResult artemis_color(const Graph& g, int verify_guard = 0);

}  // namespace pg

#endif  // PG_ARTEMIS_HPP
