// SPDX-License-Identifier: Apache-2.0
//
// Constructive NP-hardness: build the triangle-free hole-through-(a,b)
// instance from a 3-CNF formula, and the five onward reductions to
// structure-detection problems. All outputs are deterministic.

#ifndef PG_GADGETS_HPP
#define PG_GADGETS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/oracles.hpp"

namespace pg {

struct CnfFormula {
  int variables = 0;
  // Signed 1-based variable indices; exactly three literals per clause
  // (repeats allowed).
  std::vector<std::array<int, 3>> clauses;
};

// DIMACS-cnf text: 'c' comments, a "p cnf <vars> <clauses>" header,
// zero-terminated clauses. Throws std::invalid_argument on malformed
// input or clauses whose literal count differs from three.
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

// Exhaustive satisfiability sweep (2^variables assignments).
bool satisfiable_bf(const CnfFormula& f);

struct PiInstance {
  Graph graph;
  int a = -1;
  int b = -1;
  // Role name -> vertex id, e.g. "a_1", "tp_2", "v_1_3", "a", "b".
  std::map<std::string, int> labels;
};

// Variable gadgets (8 vertices, 10 edges each), clause gadgets (5
// vertices, 6 edges), literal wires, chain links and the distinguished
// degree-2 vertices a, b. The output graph is triangle-free with
// 8n + 5m + 2 vertices; it has a hole through a and b iff f is
// satisfiable.
PiInstance build_pi_instance(const CnfFormula& f);

// JSON text naming a, b and every gadget role (stable key order).
std::string pi_instance_sidecar_json(const PiInstance& inst);

enum class ReductionKind { prism, odd_prism, even_prism, lgs_k4, lgsb_k4 };

const char* reduction_kind_name(ReductionKind k);
std::optional<ReductionKind> reduction_kind_from_name(const std::string& name);

struct ReductionOutput {
  ReductionKind kind = ReductionKind::prism;
  // The parity-variant kinds emit several auxiliary graphs; the single
  // target graph otherwise. `combined` is their disjoint union in order.
  std::vector<Graph> parts;
  Graph combined;
  // Structure whose presence in `combined` encodes satisfiability.
  StructureKind target = StructureKind::prism;
  // Attachment-corner roles within part 0 (part vertex blocks follow in
  // order inside `combined`).
  std::map<std::string, int> labels;
};

// The reductions from the hole-through-(a,b) problem: two-triangle
// attachments for the prism family (plus the eight subdivision parity
// variants), and the twelve-corner attachment for the line-graph-of-K4-
// subdivision family (plus its four variants).
ReductionOutput reduce_pi(ReductionKind kind, const PiInstance& inst);

}  // namespace pg

#endif  // PG_GADGETS_HPP
