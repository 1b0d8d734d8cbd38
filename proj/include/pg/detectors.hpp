// SPDX-License-Identifier: Apache-2.0
//
// Polynomial induced-structure detectors built on guessed tuples of
// corners/midpoints plus shortest-path reconstruction. Detectors with a
// stated assumption (pyramid-free, odd-hole-free) do NOT verify it; they
// record it in `assumed_preconditions` so callers can discharge it.

#ifndef PG_DETECTORS_HPP
#define PG_DETECTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/oracles.hpp"

namespace pg {

struct DetectionResult {
  bool present = false;
  std::optional<Witness> witness;
  std::vector<std::string> assumed_preconditions;
};

// Minimum-size long hole (>= 5 vertices) via the (a,u,b) triple scheme.
DetectionResult detect_min_long_hole(const Graph& g);

// Optimal prism-or-pyramid via (a1,b1,b2,b3) quadruples; the witness kind
// says which structure was found.
DetectionResult detect_prism_or_pyramid(const Graph& g);

// Boolean prism-or-pyramid via triangle-anchored attachment marking.
bool detect_prism_or_pyramid_fast(const Graph& g);

// Minimal long prism (>= 7 vertices). Assumes g pyramid-free.
DetectionResult detect_long_prism(const Graph& g);

// Minimal even prism via 9-vertex trames (corner triangles plus exact
// path midpoints). Assumes g odd-hole-free.
DetectionResult detect_even_prism(const Graph& g);

// Minimal line graph of a nontrivial K4 subdivision via 18-vertex trames
// (twelve corners, six near-midpoints). Assumes g pyramid-free.
DetectionResult detect_lgs_ntk4(const Graph& g);

// Line graph of a bipartite nontrivial K4 subdivision; delegates to
// detect_lgs_ntk4 (nontrivial <=> bipartite when g is odd-hole-free).
DetectionResult detect_lgsb_k4(const Graph& g);

// Odd-prism presence: an LGS hit implies one; otherwise sextuple scan
// with shortest paths avoiding the four opposite corners. Assumes g
// odd-hole-free. Only the presence bit is guaranteed; a witness is
// attached when the sextuple branch finds one.
DetectionResult detect_odd_prism(const Graph& g);

// Exact presence of a line graph of a nontrivial (bipartite when
// requested) K4 subdivision, by corner assignment plus backtracking
// chain search. Exponential in the worst case; intended for sparse
// few-triangle graphs where trame enumeration is infeasible.
bool lgs_presence_scan(const Graph& g, bool bipartite_required);

}  // namespace pg

#endif  // PG_DETECTORS_HPP
