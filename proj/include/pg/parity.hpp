// SPDX-License-Identifier: Apache-2.0
//
// Matching-based shortest even paths and their applications: even-pair
// detection in line graphs and 2-pair detection.

#ifndef PG_PARITY_HPP
#define PG_PARITY_HPP

#include <map>
#include <optional>
#include <variant>

#include "pg/graph.hpp"

namespace pg {

struct Matching {
  std::vector<Edge> pairs;
  long long weight = 0;
};

// Minimum-weight perfect matching (nonnegative integer weights; edges not
// listed in `weights` are treated as absent). nullopt when no perfect
// matching exists.
std::optional<Matching> min_weight_perfect_matching(const Graph& g,
                                                    const std::map<Edge, long long>& weights);

// Shortest even-length SIMPLE path (distinct vertices, chords allowed)
// from a to b avoiding `forbidden`, via the two-copy matching reduction.
std::optional<Path> shortest_even_path(const Graph& g, int a, int b,
                                       const VertexSet& forbidden);

// Even-pair detection in an arbitrary line graph: either an odd induced
// a-b path (so not an even pair) or the verdict that {a,b} is an even
// pair. Throws std::invalid_argument when g is not a line graph or a,b are
// adjacent.
using EvenPairVerdict = std::variant<Path, std::monostate>;  // path = odd path found
EvenPairVerdict even_pair_in_line_graph(const Graph& g, int a, int b);

// A 2-pair (every induced path between the two has length exactly 2),
// found by the separation criterion; lexicographically first, or nullopt.
std::optional<std::pair<int, int>> find_two_pair(const Graph& g);

}  // namespace pg

#endif  // PG_PARITY_HPP
