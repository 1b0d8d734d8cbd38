// SPDX-License-Identifier: Apache-2.0
//
// Class recognition assembled from the polynomial detectors plus the
// exhaustive oracles, and the census harness that reproduces the small
// graph counts per class.

#ifndef PG_RECOGNIZERS_HPP
#define PG_RECOGNIZERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pg/artemis.hpp"
#include "pg/graph.hpp"
#include "pg/oracles.hpp"

namespace pg {

struct RecognitionResult {
  enum class Verdict { member, non_member, undecided };
  Verdict verdict = Verdict::undecided;
  std::optional<Witness> witness;   // present on most non-member verdicts
  bool witness_in_complement = false;  // witness validates against the complement
  std::vector<std::string> notes;   // e.g. which step was oracle-backed
};

// No odd hole, no prism, no pyramid, no long antihole. Odd holes are
// found by the exhaustive oracle (undecided above lim.structure_guard);
// the remaining steps are polynomial.
RecognitionResult recognize_artemis(const Graph& g, const OracleLimits& lim = {});

// No odd hole, no odd prism, no long antihole.
RecognitionResult recognize_even_artemis(const Graph& g, const OracleLimits& lim = {});

// Berge, no long prism in the graph or its complement, no double
// diamond, no line graph of K3,3 minus an edge.
RecognitionResult recognize_bipartisan(const Graph& g, const OracleLimits& lim = {});

// No long hole in the graph or its complement; cross-checked against
// the two-pair closure method (repeatedly add the edge of a two-pair;
// membership iff a clique is reached).
RecognitionResult recognize_weakly_triangulated(const Graph& g);

struct CensusRow {
  int n = 0;
  long long total = 0;
  // Absent class => skipped (expensive columns at the largest order).
  std::map<GraphClass, long long> counts;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::string to_csv() const;
};

// Count non-isomorphic graphs of each order 1..n_max per class (Berge,
// quasi-parity, strict quasi-parity, perfectly contractile, weakly
// triangulated, Meyniel). The three contraction-flavored columns are
// skipped for n == 7 unless expensive_classes is set. Classification
// fans out over `workers` threads; totals are deterministic.
CensusTable census(int n_max, int workers = 1, bool expensive_classes = false,
                   const OracleLimits& lim = {});

// Coloring by even-pair contraction where each candidate pair is kept
// only if the contracted graph still passes recognize_even_artemis.
// Optimality is certified solely by palette == clique size.
ColorResult even_artemis_color_experimental(const Graph& g);

}  // namespace pg

#endif  // PG_RECOGNIZERS_HPP
