// SPDX-License-Identifier: Apache-2.0

#include "pg/gadgets.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pg {

namespace {

void check_formula(const CnfFormula& f) {
  if (f.variables < 0) throw std::invalid_argument("cnf: negative variable count");
  for (const auto& cl : f.clauses)
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > f.variables)
        throw std::invalid_argument("cnf: literal out of range");
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.order();
  std::vector<Edge> es;
  int base = 0;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) es.push_back({base + u, base + v});
    base += p.order();
  }
  return Graph(n, es);
}

// New graph with the edge (u,v) replaced by a path u - w - v through a
// fresh vertex appended at the end.
Graph subdivide_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw std::logic_error("subdivide_edge: not an edge");
  std::vector<Edge> es;
  for (auto e : g.edges())
    if (!((e.first == u && e.second == v) || (e.first == v && e.second == u)))
      es.push_back(e);
  int w = g.order();
  es.push_back({u, w});
  es.push_back({v, w});
  return Graph(g.order() + 1, es);
}

// Core of the prism and line-graph reductions: drop a and b, keep the
// rest with compacted ids, and report where the old neighbors of a and
// b landed (ascending old id).
struct Stripped {
  Graph core;
  std::array<int, 2> na;  // images of the two neighbors of a
  std::array<int, 2> nb;
};

Stripped strip_ab(const PiInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.order();
  if (inst.a < 0 || inst.b < 0 || inst.a == inst.b || g.adjacent(inst.a, inst.b) ||
      g.degree(inst.a) != 2 || g.degree(inst.b) != 2)
    throw std::invalid_argument("reduce_pi: not a valid instance");
  VertexSet keep = VertexSet::full(n);
  keep.reset(inst.a);
  keep.reset(inst.b);
  std::vector<int> back;
  Stripped s{g.induced(keep, &back), {-1, -1}, {-1, -1}};
  std::vector<int> fwd(n, -1);
  for (size_t i = 0; i < back.size(); ++i) fwd[back[i]] = (int)i;
  auto two = [&](int v) {
    std::array<int, 2> r{-1, -1};
    int i = 0;
    for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w)) r[i++] = fwd[w];
    return r;
  };
  s.na = two(inst.a);
  s.nb = two(inst.b);
  return s;
}

// Two-triangle attachment: a 5-vertex gadget replaces each of a and b,
// its horns wired to the old neighbors, plus the a1-b1 bridge.
Graph prism_core(const PiInstance& inst, std::map<std::string, int>* labels) {
  Stripped s = strip_ab(inst);
  const int base = s.core.order();
  // a1..a5 = base..base+4, b1..b5 = base+5..base+9.
  auto A = [&](int i) { return base + i - 1; };
  auto B = [&](int i) { return base + 4 + i; };
  std::vector<Edge> es = s.core.edges();
  auto add_gadget = [&](auto v, std::array<int, 2> nb) {
    es.insert(es.end(), {{v(1), v(2)}, {v(1), v(3)}, {v(2), v(3)}, {v(2), v(4)}, {v(3), v(5)}});
    es.push_back({v(4), nb[0]});
    es.push_back({v(5), nb[1]});
  };
  add_gadget(A, s.na);
  add_gadget(B, s.nb);
  es.push_back({A(1), B(1)});
  if (labels) {
    for (int i = 1; i <= 5; ++i) {
      (*labels)["a" + std::to_string(i)] = A(i);
      (*labels)["b" + std::to_string(i)] = B(i);
    }
  }
  return Graph(base + 10, es);
}

// Twelve-corner attachment: four triangles standing for the branch
// vertices of K4; four zero-length chains wired directly, the two
// remaining chains routed through the old graph via the neighbors of a
// and b.
Graph lgs_core(const PiInstance& inst, std::map<std::string, int>* labels,
               std::array<int, 2>* a_horns) {
  Stripped s = strip_ab(inst);
  const int base = s.core.order();
  static const char* names[12] = {"v_ab", "v_ac", "v_ad", "v_ba", "v_bc", "v_bd",
                                  "v_ca", "v_cb", "v_cd", "v_da", "v_db", "v_dc"};
  auto id = [&](const std::string& nm) {
    for (int i = 0; i < 12; ++i)
      if (nm == names[i]) return base + i;
    throw std::logic_error("lgs_core: bad corner name");
  };
  std::vector<Edge> es = s.core.edges();
  for (int t = 0; t < 4; ++t)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) es.push_back({base + 3 * t + i, base + 3 * t + j});
  es.push_back({id("v_ab"), id("v_ba")});
  es.push_back({id("v_dc"), id("v_cd")});
  es.push_back({id("v_bd"), id("v_db")});
  es.push_back({id("v_bc"), id("v_cb")});
  es.push_back({id("v_ad"), s.na[0]});
  es.push_back({id("v_ac"), s.na[1]});
  es.push_back({id("v_da"), s.nb[0]});
  es.push_back({id("v_ca"), s.nb[1]});
  if (labels)
    for (int i = 0; i < 12; ++i) (*labels)[names[i]] = base + i;
  if (a_horns) *a_horns = {s.na[0], s.na[1]};
  return Graph(base + 12, es);
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  bool have_header = false;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      int m = 0;
      if (!(ls >> p >> fmt >> f.variables >> m) || fmt != "cnf")
        throw std::invalid_argument("dimacs: bad problem line");
      have_header = true;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw std::invalid_argument("dimacs: clause must have exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) throw std::invalid_argument("dimacs: missing problem line");
  if (!pending.empty()) throw std::invalid_argument("dimacs: unterminated clause");
  check_formula(f);
  return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
  return out.str();
}

bool satisfiable_bf(const CnfFormula& f) {
  check_formula(f);
  if (f.variables > 30) throw std::length_error("satisfiable_bf: too many variables");
  for (unsigned long long m = 0; m < (1ull << f.variables); ++m) {
    bool ok = true;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) {
        bool val = (m >> (std::abs(lit) - 1)) & 1;
        if (lit > 0 ? val : !val) sat = true;
      }
      if (!sat) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

PiInstance build_pi_instance(const CnfFormula& f) {
  check_formula(f);
  const int n = f.variables;
  const int m = (int)f.clauses.size();
  if (n < 1 || m < 1)
    throw std::invalid_argument("build_pi_instance: need at least one variable and clause");
  PiInstance inst;
  // Layout: 8 vertices per variable, then 5 per clause, then a, b.
  auto var = [&](int i, int slot) { return 8 * (i - 1) + slot; };
  enum { A = 0, Bv = 1, T = 2, F = 3, Ap = 4, Bp = 5, Tp = 6, Fp = 7 };
  auto cls = [&](int j, int slot) { return 8 * n + 5 * (j - 1) + slot; };
  enum { C = 0, D = 1, V1 = 2 };
  inst.a = 8 * n + 5 * m;
  inst.b = inst.a + 1;

  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    es.insert(es.end(), {{var(i, A), var(i, T)},
                         {var(i, A), var(i, F)},
                         {var(i, Bv), var(i, T)},
                         {var(i, Bv), var(i, F)},
                         {var(i, Ap), var(i, Tp)},
                         {var(i, Ap), var(i, Fp)},
                         {var(i, Bp), var(i, Tp)},
                         {var(i, Bp), var(i, Fp)},
                         {var(i, T), var(i, Fp)},
                         {var(i, Tp), var(i, F)}});
    static const char* slot_names[8] = {"a", "b", "t", "f", "ap", "bp", "tp", "fp"};
    for (int s = 0; s < 8; ++s)
      inst.labels[std::string(slot_names[s]) + "_" + std::to_string(i)] = var(i, s);
  }
  for (int j = 1; j <= m; ++j) {
    for (int p = 0; p < 3; ++p) {
      es.push_back({cls(j, C), cls(j, V1 + p)});
      es.push_back({cls(j, D), cls(j, V1 + p)});
      int lit = f.clauses[j - 1][p];
      int i = std::abs(lit);
      // Wires: a positive literal blocks the "false" track, a negative
      // one blocks the "true" track (set semantics, repeats collapse).
      if (lit > 0) {
        es.push_back({cls(j, V1 + p), var(i, F)});
        es.push_back({cls(j, V1 + p), var(i, Fp)});
      } else {
        es.push_back({cls(j, V1 + p), var(i, T)});
        es.push_back({cls(j, V1 + p), var(i, Tp)});
      }
      inst.labels["v_" + std::to_string(j) + "_" + std::to_string(p + 1)] = cls(j, V1 + p);
    }
    inst.labels["c_" + std::to_string(j)] = cls(j, C);
    inst.labels["d_" + std::to_string(j)] = cls(j, D);
  }
  for (int i = 1; i < n; ++i) {
    es.push_back({var(i, Bv), var(i + 1, A)});
    es.push_back({var(i, Bp), var(i + 1, Ap)});
  }
  es.push_back({var(n, Bp), cls(1, C)});
  for (int j = 1; j < m; ++j) es.push_back({cls(j, D), cls(j + 1, C)});
  es.push_back({inst.a, var(1, A)});
  es.push_back({inst.a, var(1, Ap)});
  es.push_back({inst.b, cls(m, D)});
  es.push_back({inst.b, var(n, Bv)});
  inst.labels["a"] = inst.a;
  inst.labels["b"] = inst.b;

  inst.graph = Graph(8 * n + 5 * m + 2, es);
  if (!enumerate_triangles(inst.graph).empty())
    throw std::logic_error("build_pi_instance: output not triangle-free");
  if (inst.graph.degree(inst.a) != 2 || inst.graph.degree(inst.b) != 2)
    throw std::logic_error("build_pi_instance: a or b not of degree 2");
  return inst;
}

std::string pi_instance_sidecar_json(const PiInstance& inst) {
  nlohmann::ordered_json j;
  j["graph6"] = serialize_graph6(inst.graph);
  j["order"] = inst.graph.order();
  j["a"] = inst.a;
  j["b"] = inst.b;
  nlohmann::ordered_json roles = nlohmann::ordered_json::object();
  for (const auto& [name, v] : inst.labels) roles[name] = v;
  j["roles"] = roles;
  return j.dump(2) + "\n";
}

const char* reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::prism: return "prism";
    case ReductionKind::odd_prism: return "odd-prism";
    case ReductionKind::even_prism: return "even-prism";
    case ReductionKind::lgs_k4: return "lgs-k4";
    case ReductionKind::lgsb_k4: return "lgsb-k4";
  }
  return "?";
}

std::optional<ReductionKind> reduction_kind_from_name(const std::string& name) {
  static const ReductionKind all[] = {ReductionKind::prism, ReductionKind::odd_prism,
                                      ReductionKind::even_prism, ReductionKind::lgs_k4,
                                      ReductionKind::lgsb_k4};
  for (ReductionKind k : all)
    if (name == reduction_kind_name(k)) return k;
  return std::nullopt;
}

ReductionOutput reduce_pi(ReductionKind kind, const PiInstance& inst) {
  ReductionOutput out;
  out.kind = kind;
  switch (kind) {
    case ReductionKind::prism: {
      out.parts.push_back(prism_core(inst, &out.labels));
      out.target = StructureKind::prism;
      break;
    }
    case ReductionKind::odd_prism:
    case ReductionKind::even_prism: {
      std::map<std::string, int> lab;
      Graph core = prism_core(inst, &lab);
      out.labels = lab;
      // Parity variants: subdivide or not each of a2-a4, a3-a5, a1-b1.
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            Graph h = core;
            if (i) h = subdivide_edge(h, lab["a2"], lab["a4"]);
            if (j) h = subdivide_edge(h, lab["a3"], lab["a5"]);
            if (k) h = subdivide_edge(h, lab["a1"], lab["b1"]);
            out.parts.push_back(h);
          }
      out.target = kind == ReductionKind::odd_prism ? StructureKind::odd_prism
                                                    : StructureKind::even_prism;
      break;
    }
    case ReductionKind::lgs_k4: {
      out.parts.push_back(lgs_core(inst, &out.labels, nullptr));
      out.target = StructureKind::lgs_ntk4;
      break;
    }
    case ReductionKind::lgsb_k4: {
      std::map<std::string, int> lab;
      std::array<int, 2> horns{};
      Graph core = lgs_core(inst, &lab, &horns);
      out.labels = lab;
      // Variants: subdivide or not the two wires leaving triangle a.
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Graph h = core;
          if (i) h = subdivide_edge(h, lab["v_ad"], horns[0]);
          if (j) h = subdivide_edge(h, lab["v_ac"], horns[1]);
          out.parts.push_back(h);
        }
      out.target = StructureKind::lgsb_k4;
      break;
    }
  }
  out.combined = disjoint_union(out.parts);
  return out;
}

}  // namespace pg
