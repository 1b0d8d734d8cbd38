// SPDX-License-Identifier: Apache-2.0

#include "pg/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

#include "pg/linegraph.hpp"

namespace pg {

namespace {

// ---------------------------------------------------------------------
// Mask-based scratch representation for the exhaustive searches (n <= 64).
// ---------------------------------------------------------------------

struct MaskGraph {
  int n = 0;
  std::vector<uint64_t> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
    if (n > 64) throw std::length_error("oracle scratch limited to 64 vertices");
    for (auto [u, v] : g.edges()) {
      adj[u] |= uint64_t{1} << v;
      adj[v] |= uint64_t{1} << u;
    }
  }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
  uint64_t full() const { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }
};

int popcnt(uint64_t x) { return __builtin_popcountll(x); }
int lowbit(uint64_t x) { return __builtin_ctzll(x); }

// Iterate members of a mask.
#define FOR_MASK(v, m) \
  for (uint64_t rest_ = (m); rest_; rest_ &= rest_ - 1) \
    if (int v = lowbit(rest_); true)

bool mask_is_clique(const MaskGraph& g, uint64_t s) {
  FOR_MASK(v, s) {
    if ((s & ~(uint64_t{1} << v)) & ~g.adj[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// Clique number / chromatic number / independence.
// ---------------------------------------------------------------------

int max_clique_mask(const MaskGraph& g, uint64_t cand, uint64_t cur, int best, uint64_t* best_set) {
  if (!cand) {
    if (popcnt(cur) > best && best_set) *best_set = cur;
    return std::max(best, popcnt(cur));
  }
  while (cand) {
    if (popcnt(cur) + popcnt(cand) <= best) return best;
    int v = lowbit(cand);
    cand &= cand - 1;
    int got = max_clique_mask(g, cand & g.adj[v], cur | (uint64_t{1} << v), best, best_set);
    best = std::max(best, got);
  }
  return best;
}

bool k_colorable(const MaskGraph& g, const std::vector<int>& order, size_t idx,
                 std::vector<uint64_t>& classes, int k) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int used = 0;
  for (int c = 0; c < k; ++c) {
    if (classes[c]) ++used;
    if (classes[c] & g.adj[v]) continue;
    if (!classes[c] && c > 0 && !classes[c - 1]) break;  // color symmetry cut
    classes[c] |= uint64_t{1} << v;
    if (k_colorable(g, order, idx + 1, classes, k)) return true;
    classes[c] &= ~(uint64_t{1} << v);
  }
  (void)used;
  return false;
}

int chromatic_mask(const MaskGraph& g) {
  if (g.n == 0) return 0;
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return popcnt(g.adj[a]) > popcnt(g.adj[b]); });
  int lo = max_clique_mask(g, g.full(), 0, 0, nullptr);
  for (int k = lo;; ++k) {
    std::vector<uint64_t> classes(k, 0);
    if (k_colorable(g, order, 0, classes, k)) return k;
  }
}

// ---------------------------------------------------------------------
// Induced path / cycle search.
// ---------------------------------------------------------------------

// Visits every induced x-y path; f(length) may return true to stop early.
template <class F>
bool foreach_induced_path(const MaskGraph& g, int x, int y, uint64_t allowed, F f) {
  // DFS state: tip, set of path vertices, set of vertices adjacent to a
  // non-tip path vertex (these can never be added).
  struct Frame {
    int tip;
    uint64_t path, blocked, cands;
    int len;
  };
  uint64_t ybit = uint64_t{1} << y;
  std::vector<Frame> stack;
  stack.push_back({x, uint64_t{1} << x, 0, g.adj[x] & allowed, 0});
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.cands & ybit && !(fr.blocked & ybit)) {
      if (f(fr.len + 1)) return true;
    }
    FOR_MASK(w, fr.cands & ~fr.blocked & ~ybit) {
      uint64_t wbit = uint64_t{1} << w;
      stack.push_back({w, fr.path | wbit, fr.blocked | (g.adj[fr.tip] & ~wbit),
                       g.adj[w] & allowed & ~(fr.path | wbit), fr.len + 1});
    }
  }
  return false;
}

// Reconstructing variant: returns one induced x-y path whose length
// satisfies `want` (parity predicate), if any.
std::optional<std::vector<int>> find_induced_path(const MaskGraph& g, int x, int y,
                                                  uint64_t allowed, int parity) {
  std::vector<int> path{x};
  uint64_t ybit = uint64_t{1} << y;
  std::optional<std::vector<int>> result;
  // Recursive lambda DFS keeping the explicit vertex sequence.
  auto rec = [&](auto&& self, int tip, uint64_t pset, uint64_t blocked) -> bool {
    if ((g.adj[tip] & ybit) && !(blocked & ybit)) {
      if (parity < 0 || (int)path.size() % 2 == parity) {  // length = size, y appended
        result = path;
        result->push_back(y);
        return true;
      }
    }
    uint64_t cands = g.adj[tip] & allowed & ~pset & ~blocked & ~ybit;
    FOR_MASK(w, cands) {
      path.push_back(w);
      if (self(self, w, pset | (uint64_t{1} << w), blocked | (g.adj[tip] & ~(uint64_t{1} << w))))
        return true;
      path.pop_back();
    }
    return false;
  };
  rec(rec, x, uint64_t{1} << x, 0);
  return result;
}

}  // namespace

// ---------------------------------------------------------------------
// Names.
// ---------------------------------------------------------------------

const char* structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::odd_hole: return "odd-hole";
    case StructureKind::long_hole: return "long-hole";
    case StructureKind::long_antihole: return "long-antihole";
    case StructureKind::prism: return "prism";
    case StructureKind::long_prism: return "long-prism";
    case StructureKind::even_prism: return "even-prism";
    case StructureKind::odd_prism: return "odd-prism";
    case StructureKind::pyramid: return "pyramid";
    case StructureKind::lgs_ntk4: return "lgs-ntk4";
    case StructureKind::lgsb_k4: return "lgsb-k4";
    case StructureKind::double_diamond: return "double-diamond";
    case StructureKind::l_k33_minus_e: return "l-k33-minus-e";
    case StructureKind::claw: return "claw";
    case StructureKind::diamond: return "diamond";
  }
  return "?";
}

std::optional<StructureKind> structure_kind_from_name(const std::string& name) {
  static const StructureKind all[] = {
      StructureKind::odd_hole,   StructureKind::long_hole,     StructureKind::long_antihole,
      StructureKind::prism,      StructureKind::long_prism,    StructureKind::even_prism,
      StructureKind::odd_prism,  StructureKind::pyramid,       StructureKind::lgs_ntk4,
      StructureKind::lgsb_k4,    StructureKind::double_diamond, StructureKind::l_k33_minus_e,
      StructureKind::claw,       StructureKind::diamond};
  for (auto k : all)
    if (name == structure_kind_name(k)) return k;
  return std::nullopt;
}

const char* graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::berge: return "berge";
    case GraphClass::perfect: return "perfect";
    case GraphClass::meyniel: return "meyniel";
    case GraphClass::weakly_triangulated: return "weakly-triangulated";
    case GraphClass::quasi_parity: return "quasi-parity";
    case GraphClass::strict_quasi_parity: return "strict-quasi-parity";
    case GraphClass::perfectly_contractile: return "perfectly-contractile";
    case GraphClass::artemis: return "artemis";
    case GraphClass::even_artemis: return "even-artemis";
    case GraphClass::bipartisan: return "bipartisan";
  }
  return "?";
}

std::optional<GraphClass> graph_class_from_name(const std::string& name) {
  static const GraphClass all[] = {
      GraphClass::berge,        GraphClass::perfect,
      GraphClass::meyniel,      GraphClass::weakly_triangulated,
      GraphClass::quasi_parity, GraphClass::strict_quasi_parity,
      GraphClass::perfectly_contractile, GraphClass::artemis,
      GraphClass::even_artemis, GraphClass::bipartisan};
  for (auto c : all)
    if (name == graph_class_name(c)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Shape tests.
// ---------------------------------------------------------------------

bool is_hole_graph(const Graph& g) {
  int n = g.order();
  if (n < 4 || g.size() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

namespace {

// Walk from `from` along its unique edge not inside `avoid_edges_within`,
// through degree-2 vertices, until a vertex of `stop` is reached. Returns
// (stop vertex, walk length, set of interior vertices) or nullopt.
struct WalkResult {
  int end, len;
  VertexSet interior;
};

std::optional<WalkResult> walk_degree2(const Graph& g, int from, const VertexSet& own_triangle,
                                       const VertexSet& stop) {
  VertexSet nb = g.neighbors(from) - own_triangle;
  if (nb.count() != 1) return std::nullopt;
  WalkResult r{-1, 0, VertexSet(g.order())};
  int prev = from, cur = nb.first();
  while (true) {
    ++r.len;
    if (stop.test(cur)) {
      r.end = cur;
      return r;
    }
    if (g.degree(cur) != 2) return std::nullopt;
    r.interior.set(cur);
    VertexSet step = g.neighbors(cur);
    step.reset(prev);
    if (step.count() != 1) return std::nullopt;
    prev = cur;
    cur = step.first();
    if (r.interior.test(cur)) return std::nullopt;
  }
}

}  // namespace

bool is_prism_shape(const Graph& g, int path_len[3]) {
  int n = g.order();
  if (n < 6) return false;
  auto tris = enumerate_triangles(g);
  if (tris.size() != 2) return false;
  VertexSet t1(n), t2(n);
  for (int i = 0; i < 3; ++i) t1.set(tris[0][i]), t2.set(tris[1][i]);
  if (t1.intersects(t2)) return false;
  for (int i = 0; i < 3; ++i)
    if (g.degree(tris[0][i]) != 3 || g.degree(tris[1][i]) != 3) return false;
  VertexSet corners = t1 | t2;
  for (int v = 0; v < n; ++v)
    if (!corners.test(v) && g.degree(v) != 2) return false;
  VertexSet covered = corners;
  VertexSet ends(n);
  int total = 6;
  for (int i = 0; i < 3; ++i) {
    auto w = walk_degree2(g, tris[0][i], t1, t2);
    if (!w || ends.test(w->end)) return false;
    ends.set(w->end);
    covered |= w->interior;
    total += w->len;
    if (path_len) path_len[i] = w->len;
  }
  return covered.count() == n && g.size() == total;
}

bool is_pyramid_shape(const Graph& g) {
  int n = g.order();
  if (n < 6) return false;
  auto tris = enumerate_triangles(g);
  if (tris.size() != 1) return false;
  VertexSet tri(n);
  for (int i = 0; i < 3; ++i) tri.set(tris[0][i]);
  int apex = -1;
  for (int v = 0; v < n; ++v) {
    if (tri.test(v)) {
      if (g.degree(v) != 3) return false;
    } else if (g.degree(v) == 3) {
      if (apex != -1) return false;
      apex = v;
    } else if (g.degree(v) != 2) {
      return false;
    }
  }
  if (apex == -1) return false;
  // Three walks from the apex must reach the three distinct corners, at
  // most one of them directly (paths internally disjoint by degree).
  VertexSet apex_only = VertexSet::of(n, {apex});
  VertexSet covered = tri;
  covered.set(apex);
  VertexSet ends(n);
  int total = 3, short_paths = 0;
  const VertexSet& nb = g.neighbors(apex);
  for (int x = nb.first(); x >= 0; x = nb.next(x)) {
    // Walk the path starting with edge apex-x.
    int prev = apex, cur = x, len = 0;
    VertexSet interior(n);
    while (true) {
      ++len;
      if (tri.test(cur)) break;
      if (g.degree(cur) != 2 || cur == apex) return false;
      interior.set(cur);
      VertexSet step = g.neighbors(cur);
      step.reset(prev);
      if (step.count() != 1) return false;
      prev = cur;
      cur = step.first();
      if (interior.test(cur)) return false;
    }
    if (ends.test(cur)) return false;
    ends.set(cur);
    covered |= interior;
    total += len;
    if (len == 1) ++short_paths;
  }
  (void)apex_only;
  return short_paths <= 1 && ends == tri && covered.count() == n && g.size() == total;
}

bool is_lgs_ntk4_shape(const Graph& g, bool* bipartite_root) {
  if (g.order() <= 6 || !is_connected(g)) return false;
  auto root = root_lehot(g);
  if (!root) return false;
  const Graph& r = root->root;
  int n = r.order();
  // A nontrivial K4 subdivision: connected, four degree-3 branch vertices,
  // everything else degree 2, and the six chains pairwise join distinct
  // branch-vertex pairs covering all of K4.
  if (n <= 4 || !is_connected(r)) return false;
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    int d = r.degree(v);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return false;
  }
  if (branch.size() != 4) return false;
  std::map<std::pair<int, int>, int> chains;
  VertexSet bset(n);
  for (int b : branch) bset.set(b);
  for (int b : branch) {
    const VertexSet& nb = r.neighbors(b);
    for (int x = nb.first(); x >= 0; x = nb.next(x)) {
      int prev = b, cur = x;
      while (!bset.test(cur)) {
        VertexSet step = r.neighbors(cur);
        step.reset(prev);
        if (step.count() != 1) return false;
        prev = cur;
        cur = step.first();
      }
      if (cur == b) return false;  // chain loops back
      ++chains[{std::min(b, cur), std::max(b, cur)}];
    }
  }
  if (chains.size() != 6) return false;
  for (auto& [pair, cnt] : chains)
    if (cnt != 2) return false;  // each chain seen once from each side
  if (bipartite_root) *bipartite_root = is_bipartite(r);
  return true;
}

// ---------------------------------------------------------------------
// Witness classification and validation.
// ---------------------------------------------------------------------

namespace {

// Does the induced subgraph h (with back-map to g's ids) match `kind`?
// Fills roles using g's vertex ids.
bool classify_shape(const Graph& h, const std::vector<int>& back, StructureKind kind,
                    std::map<std::string, std::vector<int>>* roles) {
  auto map_back = [&](const std::vector<int>& local) {
    std::vector<int> out;
    for (int v : local) out.push_back(back[v]);
    return out;
  };
  auto all = [&]() {
    std::vector<int> out;
    for (int v : back) out.push_back(v);
    return out;
  };
  int n = h.order();
  switch (kind) {
    case StructureKind::odd_hole:
      if (!(n >= 5 && n % 2 == 1 && is_hole_graph(h))) return false;
      if (roles) (*roles)["hole"] = all();
      return true;
    case StructureKind::long_hole:
      if (!(n >= 5 && is_hole_graph(h))) return false;
      if (roles) (*roles)["hole"] = all();
      return true;
    case StructureKind::long_antihole:
      if (!(n >= 5 && is_hole_graph(h.complement()))) return false;
      if (roles) (*roles)["antihole"] = all();
      return true;
    case StructureKind::prism:
    case StructureKind::long_prism:
    case StructureKind::even_prism:
    case StructureKind::odd_prism: {
      int len[3];
      if (!is_prism_shape(h, len)) return false;
      if (kind == StructureKind::long_prism && n < 7) return false;
      if (kind == StructureKind::even_prism &&
          (len[0] % 2 || len[1] % 2 || len[2] % 2)) return false;
      if (kind == StructureKind::odd_prism &&
          (len[0] % 2 == 0 || len[1] % 2 == 0 || len[2] % 2 == 0)) return false;
      if (roles) {
        auto tris = enumerate_triangles(h);
        (*roles)["triangle0"] = map_back({tris[0][0], tris[0][1], tris[0][2]});
        (*roles)["triangle1"] = map_back({tris[1][0], tris[1][1], tris[1][2]});
      }
      return true;
    }
    case StructureKind::pyramid: {
      if (!is_pyramid_shape(h)) return false;
      if (roles) {
        auto tris = enumerate_triangles(h);
        (*roles)["triangle"] = map_back({tris[0][0], tris[0][1], tris[0][2]});
        for (int v = 0; v < n; ++v)
          if (h.degree(v) == 3 && v != tris[0][0] && v != tris[0][1] && v != tris[0][2])
            (*roles)["apex"] = map_back({v});
      }
      return true;
    }
    case StructureKind::lgs_ntk4:
    case StructureKind::lgsb_k4: {
      bool bip = false;
      if (!is_lgs_ntk4_shape(h, &bip)) return false;
      if (kind == StructureKind::lgsb_k4 && !bip) return false;
      if (roles) (*roles)["lgs"] = all();
      return true;
    }
    case StructureKind::double_diamond:
      if (!(n == 8 && is_isomorphic(h, double_diamond_graph()))) return false;
      if (roles) (*roles)["double-diamond"] = all();
      return true;
    case StructureKind::l_k33_minus_e:
      if (!(n == 8 && is_isomorphic(h, l_k33_minus_e_graph()))) return false;
      if (roles) (*roles)["l-k33-minus-e"] = all();
      return true;
    case StructureKind::claw:
      if (!(n == 4 && is_isomorphic(h, claw_graph()))) return false;
      if (roles) (*roles)["claw"] = all();
      return true;
    case StructureKind::diamond:
      if (!(n == 4 && is_isomorphic(h, diamond_graph()))) return false;
      if (roles) (*roles)["diamond"] = all();
      return true;
  }
  return false;
}

int min_structure_size(StructureKind kind) {
  switch (kind) {
    case StructureKind::claw:
    case StructureKind::diamond: return 4;
    case StructureKind::odd_hole:
    case StructureKind::long_hole:
    case StructureKind::long_antihole: return 5;
    case StructureKind::prism:
    case StructureKind::odd_prism: return 6;
    case StructureKind::pyramid: return 6;
    case StructureKind::long_prism: return 7;
    case StructureKind::lgs_ntk4:
    case StructureKind::lgsb_k4: return 7;
    case StructureKind::double_diamond:
    case StructureKind::l_k33_minus_e: return 8;
    case StructureKind::even_prism: return 9;
  }
  return 4;
}

int max_structure_size(StructureKind kind, int n) {
  switch (kind) {
    case StructureKind::claw:
    case StructureKind::diamond: return 4;
    case StructureKind::double_diamond:
    case StructureKind::l_k33_minus_e: return 8;
    default: return n;
  }
}

}  // namespace

bool validate_witness(const Graph& g, const Witness& w) {
  std::vector<int> back;
  Graph h = g.induced(w.vertices, &back);
  if (!classify_shape(h, back, w.kind, nullptr)) return false;
  // Role sanity where present: role vertices must belong to the witness.
  for (const auto& [label, vs] : w.roles)
    for (int v : vs)
      if (v < 0 || v >= g.order() || !w.vertices.test(v)) return false;
  return true;
}

std::optional<Witness> find_structure_bf(const Graph& g, StructureKind kind,
                                         const OracleLimits& lim) {
  int n = g.order();
  if (n > lim.structure_guard)
    throw std::length_error("find_structure_bf guard exceeded");
  int lo = min_structure_size(kind), hi = std::min(n, max_structure_size(kind, n));
  std::vector<int> comb;
  for (int k = lo; k <= hi; ++k) {
    // Enumerate k-subsets in lexicographic order.
    comb.resize(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      VertexSet vs(n);
      for (int v : comb) vs.set(v);
      std::vector<int> back;
      Graph h = g.induced(vs, &back);
      Witness w{kind, vs, {}};
      if (classify_shape(h, back, kind, &w.roles)) return w;
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Exact invariants.
// ---------------------------------------------------------------------

int clique_number_bf(const Graph& g) {
  if (g.order() == 0) return 0;
  MaskGraph m(g);
  return max_clique_mask(m, m.full(), 0, 0, nullptr);
}

VertexSet max_clique_bf(const Graph& g) {
  VertexSet out(g.order());
  if (g.order() == 0) return out;
  MaskGraph m(g);
  uint64_t best_set = 0;
  max_clique_mask(m, m.full(), 0, 0, &best_set);
  FOR_MASK(v, best_set) out.set(v);
  return out;
}

int independence_number_bf(const Graph& g) { return clique_number_bf(g.complement()); }

int chromatic_number_bf(const Graph& g, const OracleLimits& lim) {
  if (g.order() > lim.structure_guard)
    throw std::length_error("chromatic_number_bf guard exceeded");
  if (g.order() == 0) return 0;
  MaskGraph m(g);
  return chromatic_mask(m);
}

bool is_even_pair_bf(const Graph& g, int x, int y, const OracleLimits& lim) {
  if (x == y || g.adjacent(x, y)) throw std::invalid_argument("even pair needs a nonadjacent pair");
  if (g.order() > lim.structure_guard)
    throw std::length_error("is_even_pair_bf guard exceeded");
  MaskGraph m(g);
  bool odd_found = foreach_induced_path(m, x, y, m.full(),
                                        [](int len) { return len % 2 == 1; });
  return !odd_found;
}

bool is_two_pair_bf(const Graph& g, int x, int y) {
  if (x == y || g.adjacent(x, y)) return false;
  MaskGraph m(g);
  return !foreach_induced_path(m, x, y, m.full(), [](int len) { return len != 2; });
}

std::optional<Path> odd_induced_path_bf(const Graph& g, int x, int y) {
  if (x == y || g.adjacent(x, y)) return std::nullopt;
  MaskGraph m(g);
  auto vs = find_induced_path(m, x, y, m.full(), 1);
  if (!vs) return std::nullopt;
  return Path{*vs, Path::Kind::induced};
}

// ---------------------------------------------------------------------
// Class membership.
// ---------------------------------------------------------------------

namespace {

bool subset_has(const Graph& g, StructureKind kind, const OracleLimits& lim) {
  OracleLimits local = lim;
  local.structure_guard = std::max(lim.structure_guard, g.order());
  return find_structure_bf(g, kind, local).has_value();
}

bool has_even_pair(const Graph& g) {
  if (g.order() > 64) throw std::length_error("has_even_pair scratch limit");
  MaskGraph m(g);
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      if (m.adjacent(x, y)) continue;
      if (!foreach_induced_path(m, x, y, m.full(), [](int len) { return len % 2 == 1; }))
        return true;
    }
  return false;
}

bool is_meyniel(const Graph& g) {
  // Every odd cycle (not necessarily induced) with >= 5 vertices has at
  // least two chords. Enumerate all simple cycles anchored at their
  // smallest vertex.
  MaskGraph m(g);
  int n = g.order();
  std::vector<int> path;
  auto chords = [&](const std::vector<int>& cyc) {
    int k = (int)cyc.size(), c = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
        if (!consecutive && m.adjacent(cyc[i], cyc[j])) ++c;
      }
    return c;
  };
  // DFS from anchor a using only vertices > a, closing back to a.
  bool ok = true;
  auto rec = [&](auto&& self, int a, int tip, uint64_t pset) -> void {
    if (!ok) return;
    FOR_MASK(w, m.adj[tip] & ~pset) {
      if (w <= a) continue;
      path.push_back(w);
      if (path.size() >= 3 && m.adjacent(w, a)) {
        if (path.size() + 0 >= 5 && path.size() % 2 == 1 && chords(path) < 2) {
          ok = false;
        }
      }
      if (ok) self(self, a, w, pset | (uint64_t{1} << w));
      path.pop_back();
      if (!ok) return;
    }
  };
  for (int a = 0; a < n && ok; ++a) {
    path = {a};
    rec(rec, a, a, uint64_t{1} << a);
  }
  return ok;
}

bool is_perfect_bf(const Graph& g) {
  int n = g.order();
  MaskGraph m(g);
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    VertexSet vs(n);
    FOR_MASK(v, s) vs.set(v);
    Graph h = g.induced(vs);
    MaskGraph mh(h);
    int w = max_clique_mask(mh, mh.full(), 0, 0, nullptr);
    if (chromatic_mask(mh) != w) return false;
  }
  return true;
}

bool is_contractile(const Graph& g, std::map<std::vector<uint8_t>, bool>& memo);

Graph contract_pair(const Graph& g, int x, int y) {
  // Keep order with y removed; the merged vertex sits at x's slot.
  int n = g.order();
  std::vector<int> newid(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (v != y) newid[v] = k++;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    int a = (u == y) ? newid[x] : newid[u];
    int b = (v == y) ? newid[x] : newid[v];
    if (a != b) e.push_back({a, b});
  }
  return Graph(n - 1, e);
}

bool is_contractile(const Graph& g, std::map<std::vector<uint8_t>, bool>& memo) {
  int n = g.order();
  if (n <= 1) return true;
  MaskGraph m(g);
  if (mask_is_clique(m, m.full())) return true;
  auto key = canonical_form(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;  // provisional (no cycles possible, size decreases)
  bool ok = false;
  for (int x = 0; x < n && !ok; ++x)
    for (int y = x + 1; y < n && !ok; ++y) {
      if (m.adjacent(x, y)) continue;
      if (foreach_induced_path(m, x, y, m.full(), [](int len) { return len % 2 == 1; }))
        continue;  // not an even pair
      ok = is_contractile(contract_pair(g, x, y), memo);
    }
  memo[key] = ok;
  return ok;
}

std::map<std::vector<uint8_t>, bool>& contractile_memo() {
  static std::map<std::vector<uint8_t>, bool> memo;
  return memo;
}

}  // namespace

bool class_membership_bf(const Graph& g, GraphClass c, const OracleLimits& lim) {
  int n = g.order();
  if (n > lim.membership_guard)
    throw std::length_error("class_membership_bf guard exceeded");
  switch (c) {
    case GraphClass::berge:
      return !subset_has(g, StructureKind::odd_hole, lim) &&
             !subset_has(g.complement(), StructureKind::odd_hole, lim);
    case GraphClass::perfect:
      return is_perfect_bf(g);
    case GraphClass::meyniel:
      return is_meyniel(g);
    case GraphClass::weakly_triangulated:
      return !subset_has(g, StructureKind::long_hole, lim) &&
             !subset_has(g.complement(), StructureKind::long_hole, lim);
    case GraphClass::quasi_parity: {
      for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
        if (popcnt(s) < 2) continue;
        VertexSet vs(n);
        FOR_MASK(v, s) vs.set(v);
        Graph h = g.induced(vs);
        if (!has_even_pair(h) && !has_even_pair(h.complement())) return false;
      }
      return true;
    }
    case GraphClass::strict_quasi_parity: {
      for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
        if (popcnt(s) < 2) continue;
        VertexSet vs(n);
        FOR_MASK(v, s) vs.set(v);
        Graph h = g.induced(vs);
        MaskGraph mh(h);
        if (mask_is_clique(mh, mh.full())) continue;
        if (!has_even_pair(h)) return false;
      }
      return true;
    }
    case GraphClass::perfectly_contractile: {
      for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
        VertexSet vs(n);
        FOR_MASK(v, s) vs.set(v);
        if (!is_contractile(g.induced(vs), contractile_memo())) return false;
      }
      return true;
    }
    case GraphClass::artemis:
      return !subset_has(g, StructureKind::odd_hole, lim) &&
             !subset_has(g, StructureKind::long_antihole, lim) &&
             !subset_has(g, StructureKind::prism, lim);
    case GraphClass::even_artemis:
      return !subset_has(g, StructureKind::odd_hole, lim) &&
             !subset_has(g, StructureKind::long_antihole, lim) &&
             !subset_has(g, StructureKind::odd_prism, lim);
    case GraphClass::bipartisan:
      return class_membership_bf(g, GraphClass::berge, lim) &&
             !subset_has(g, StructureKind::long_prism, lim) &&
             !subset_has(g.complement(), StructureKind::long_prism, lim) &&
             !subset_has(g, StructureKind::double_diamond, lim) &&
             !subset_has(g, StructureKind::l_k33_minus_e, lim);
  }
  return false;
}

// ---------------------------------------------------------------------
// Canonical form and enumeration.
// ---------------------------------------------------------------------

namespace {

// Backtracking search for the permutation minimizing the upper-triangle
// bit-string (row-major (i,j), i<j). perm[i] = original vertex placed at
// position i. Compares the bits contributed by each newly placed vertex
// against the best known prefix.
struct CanonState {
  const MaskGraph* g;
  std::vector<int> perm, best_perm;
  std::vector<uint8_t> cur, best;  // one byte per bit, packed at the end
  bool have_best = false;

  void run() {
    int n = g->n;
    perm.clear();
    cur.assign(n * (n - 1) / 2, 0);
    std::vector<bool> used(n, false);
    rec(used, 0);
  }

  // bits for position k: adjacency of perm[k] to perm[0..k-1]
  void rec(std::vector<bool>& used, int pos) {
    int n = g->n;
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    int base = pos * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool prune = false;
      for (int i = 0; i < pos; ++i) cur[base + i] = g->adjacent(perm[i], v) ? 1 : 0;
      if (have_best) {
        int cmp = std::memcmp(cur.data(), best.data(), base + pos);
        if (cmp > 0) prune = true;
      }
      if (!prune) {
        used[v] = true;
        perm.push_back(v);
        rec(used, pos + 1);
        perm.pop_back();
        used[v] = false;
      }
    }
  }
};

}  // namespace

std::vector<uint8_t> canonical_form(const Graph& g) {
  int n = g.order();
  MaskGraph m(g);
  CanonState st;
  st.g = &m;
  st.run();
  // Pack bits into bytes, prefixed by the order.
  std::vector<uint8_t> out;
  out.push_back((uint8_t)n);
  uint8_t acc = 0;
  int nb = 0;
  for (uint8_t b : st.best) {
    acc = (acc << 1) | b;
    if (++nb == 8) {
      out.push_back(acc);
      acc = 0;
      nb = 0;
    }
  }
  if (nb) out.push_back(acc << (8 - nb));
  return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
  if (n > 7) throw std::length_error("enumerate_nonisomorphic limited to n <= 7");
  if (n <= 0) return {};
  // Grow by one vertex at a time, deduplicating by canonical form.
  std::vector<Graph> cur{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::vector<uint8_t>, Graph> next;
    for (const Graph& g : cur) {
      for (uint64_t nb = 0; nb < (uint64_t{1} << (k - 1)); ++nb) {
        std::vector<Edge> e = g.edges();
        FOR_MASK(v, nb) e.push_back({v, k - 1});
        Graph h(k, e);
        auto key = canonical_form(h);
        next.emplace(std::move(key), std::move(h));
      }
    }
    cur.clear();
    for (auto& [key, g] : next) cur.push_back(std::move(g));
  }
  return cur;
}

// ---------------------------------------------------------------------
// Partitionable graphs.
// ---------------------------------------------------------------------

namespace {

// All cliques of size k, as masks.
void cliques_of_size(const MaskGraph& g, uint64_t cand, uint64_t cur, int k,
                     std::vector<uint64_t>& out) {
  if (popcnt(cur) == k) {
    out.push_back(cur);
    return;
  }
  while (cand) {
    if (popcnt(cur) + popcnt(cand) < k) return;
    int v = lowbit(cand);
    cand &= cand - 1;
    cliques_of_size(g, cand & g.adj[v], cur | (uint64_t{1} << v), k, out);
  }
}

// Can `verts` be partitioned into blocks drawn from `blocks`?
bool exact_partition(uint64_t verts, const std::vector<uint64_t>& blocks, size_t from = 0) {
  if (!verts) return true;
  int v = lowbit(verts);
  for (size_t i = 0; i < blocks.size(); ++i) {
    uint64_t b = blocks[i];
    if (!(b & (uint64_t{1} << v)) || (b & ~verts)) continue;
    if (exact_partition(verts & ~b, blocks)) return true;
  }
  (void)from;
  return false;
}

// Count partitions of `verts` into exactly k stables (unordered),
// stopping at `cap`.
int count_stable_partitions(const MaskGraph& g, uint64_t verts, int k, int cap) {
  // Assign the smallest uncovered vertex to an existing or a new class.
  std::vector<uint64_t> classes;
  int count = 0;
  auto rec = [&](auto&& self, uint64_t rest) -> void {
    if (count >= cap) return;
    if (!rest) {
      if ((int)classes.size() == k) ++count;
      return;
    }
    int v = lowbit(rest);
    uint64_t vbit = uint64_t{1} << v;
    size_t existing = classes.size();
    for (size_t i = 0; i < existing; ++i) {
      if (classes[i] & g.adj[v]) continue;
      classes[i] |= vbit;
      self(self, rest & ~vbit);
      classes[i] &= ~vbit;
      if (count >= cap) return;
    }
    if ((int)classes.size() < k) {
      classes.push_back(vbit);
      self(self, rest & ~vbit);
      classes.pop_back();
    }
  };
  rec(rec, verts);
  return count;
}

}  // namespace

std::optional<PartitionableReport> partitionable_check(const Graph& g,
                                                       const OracleLimits& lim) {
  int n = g.order();
  if (n > lim.partitionable_guard)
    throw std::length_error("partitionable_check guard exceeded");
  if (n < 2) return std::nullopt;
  MaskGraph m(g);
  MaskGraph mc(g.complement());
  int omega = max_clique_mask(m, m.full(), 0, 0, nullptr);
  int alpha = max_clique_mask(mc, mc.full(), 0, 0, nullptr);
  if (n != alpha * omega + 1) return std::nullopt;

  std::vector<uint64_t> wcliques, astables;
  cliques_of_size(m, m.full(), 0, omega, wcliques);
  cliques_of_size(mc, mc.full(), 0, alpha, astables);

  // Definition: for every v, G minus v partitions both ways.
  for (int v = 0; v < n; ++v) {
    uint64_t rest = m.full() & ~(uint64_t{1} << v);
    if (!exact_partition(rest, wcliques)) return std::nullopt;
    if (!exact_partition(rest, astables)) return std::nullopt;
  }

  PartitionableReport rep;
  rep.alpha = alpha;
  rep.omega = omega;
  rep.num_omega_cliques = (int)wcliques.size();
  rep.num_alpha_stables = (int)astables.size();

  rep.per_vertex_incidence = true;
  for (int v = 0; v < n; ++v) {
    int ck = 0, sk = 0;
    for (uint64_t c : wcliques) ck += (c >> v) & 1;
    for (uint64_t s : astables) sk += (s >> v) & 1;
    if (ck != omega || sk != alpha) rep.per_vertex_incidence = false;
  }

  rep.clique_stable_pairing = true;
  for (uint64_t c : wcliques) {
    int disj = 0;
    for (uint64_t s : astables) disj += (c & s) == 0;
    if (disj != 1) rep.clique_stable_pairing = false;
  }
  for (uint64_t s : astables) {
    int disj = 0;
    for (uint64_t c : wcliques) disj += (c & s) == 0;
    if (disj != 1) rep.clique_stable_pairing = false;
  }

  rep.unique_colorings = true;
  for (int v = 0; v < n; ++v) {
    uint64_t rest = m.full() & ~(uint64_t{1} << v);
    if (count_stable_partitions(m, rest, omega, 2) != 1) rep.unique_colorings = false;
  }
  return rep;
}

// ---------------------------------------------------------------------
// Structural presence checks for large sparse graphs.
// ---------------------------------------------------------------------

namespace {

// DFS for an induced path from x to y inside `allowed` (bitset), where no
// path vertex other than the declared attach points may be adjacent to any
// vertex of `apart` (used to keep prism paths clean). VertexSet flavor for
// graphs beyond 64 vertices.
struct PathSearch {
  const Graph& g;
  VertexSet allowed;
  int parity;  // -1 = any, else required length parity
  std::vector<int> path;

  PathSearch(const Graph& g_, VertexSet allowed_, int parity_)
      : g(g_), allowed(std::move(allowed_)), parity(parity_) {}

  template <class F>
  bool run(int x, int y, F accept) {
    path = {x};
    VertexSet pset(g.order());
    pset.set(x);
    return rec(x, y, pset, VertexSet(g.order()), accept);
  }

  template <class F>
  bool rec(int tip, int y, VertexSet& pset, const VertexSet& blocked, F accept) {
    if (g.adjacent(tip, y) && !blocked.test(y)) {
      int len = (int)path.size();
      if (parity < 0 || len % 2 == parity) {
        path.push_back(y);
        if (accept(path)) return true;
        path.pop_back();
      }
    }
    VertexSet cands = (g.neighbors(tip) & allowed) - pset;
    cands -= blocked;
    if (cands.test(y)) cands.reset(y);
    for (int w = cands.first(); w >= 0; w = cands.next(w)) {
      VertexSet nb = g.neighbors(tip);
      nb.reset(w);
      path.push_back(w);
      pset.set(w);
      if (rec(w, y, pset, blocked | nb, accept)) return true;
      pset.reset(w);
      path.pop_back();
    }
    return false;
  }
};

// Parity requirement per prism kind (-1 = none).
int prism_parity(StructureKind kind) {
  if (kind == StructureKind::even_prism) return 0;
  if (kind == StructureKind::odd_prism) return 1;
  return -1;
}

bool prism_like(StructureKind kind) {
  return kind == StructureKind::prism || kind == StructureKind::long_prism ||
         kind == StructureKind::even_prism || kind == StructureKind::odd_prism;
}

// Anchored prism search: pick two disjoint triangles, a corner matching,
// then three pairwise-compatible induced paths. Presence only.
bool contains_prism(const Graph& g, StructureKind kind) {
  auto tris = enumerate_triangles(g);
  int n = g.order();
  int parity = prism_parity(kind);
  for (size_t i = 0; i < tris.size(); ++i)
    for (size_t j = i + 1; j < tris.size(); ++j) {
      auto &t1 = tris[i], &t2 = tris[j];
      bool share = false;
      for (int a : t1)
        for (int b : t2)
          if (a == b) share = true;
      if (share) continue;
      static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (auto& p : perms) {
        int a[3] = {t1[0], t1[1], t1[2]};
        int b[3] = {t2[p[0]], t2[p[1]], t2[p[2]]};
        // No edges between unmatched corners of the two triangles.
        bool clean = true;
        for (int k = 0; k < 3 && clean; ++k)
          for (int l = 0; l < 3 && clean; ++l)
            if (k != l && g.adjacent(a[k], b[l])) clean = false;
        if (!clean) continue;
        // Interiors must avoid all six corners and their other-corner
        // adjacencies; intra-path induction handled by PathSearch.
        VertexSet corners(n);
        for (int k = 0; k < 3; ++k) corners.set(a[k]), corners.set(b[k]);
        auto allowed_for = [&](int k) {
          VertexSet allow = VertexSet::full(n) - corners;
          for (int l = 0; l < 3; ++l) {
            if (l == k) continue;
            allow -= g.neighbors(a[l]);
            allow -= g.neighbors(b[l]);
          }
          allow.set(a[k]);
          return allow;
        };
        // Path 0, then 1 restricted away from path 0, then 2.
        PathSearch s0(g, allowed_for(0), parity);
        bool found = s0.run(a[0], b[0], [&](const std::vector<int>& p0) {
          VertexSet p0int(n);
          for (size_t q = 1; q + 1 < p0.size(); ++q) p0int.set(p0[q]);
          VertexSet p0block = p0int;
          for (int v = p0int.first(); v >= 0; v = p0int.next(v)) p0block |= g.neighbors(v);
          VertexSet al1 = allowed_for(1) - p0block;
          al1.set(a[1]);
          PathSearch s1(g, al1, parity);
          return s1.run(a[1], b[1], [&](const std::vector<int>& p1) {
            VertexSet p1int(n);
            for (size_t q = 1; q + 1 < p1.size(); ++q) p1int.set(p1[q]);
            VertexSet p1block = p1int;
            for (int v = p1int.first(); v >= 0; v = p1int.next(v)) p1block |= g.neighbors(v);
            VertexSet al2 = (allowed_for(2) - p0block) - p1block;
            al2.set(a[2]);
            PathSearch s2(g, al2, parity);
            return s2.run(a[2], b[2], [&](const std::vector<int>& p2) {
              // Union size = total path vertices (corners counted once).
              int total = (int)(p0.size() + p1.size() + p2.size());
              return kind != StructureKind::long_prism || total >= 7;
            });
          });
        });
        if (found) return true;
      }
    }
  return false;
}

}  // namespace

bool has_hole_through_bf(const Graph& g, int a, int b) {
  if (a == b) return false;
  int n = g.order();
  const VertexSet& na = g.neighbors(a);
  for (int p = na.first(); p >= 0; p = na.next(p))
    for (int q = na.next(p); q >= 0; q = na.next(q)) {
      // Hole = a + induced p..q path avoiding N(a) internally, with >= 1
      // interior vertex (otherwise a triangle or a C4 is still fine when
      // p,q nonadjacent: cycle size = path size + 1 >= 4).
      VertexSet allow = VertexSet::full(n) - g.neighbors(a);
      allow.reset(a);
      allow.set(p);
      allow.set(q);
      PathSearch s(g, allow, -1);
      bool found = s.run(p, q, [&](const std::vector<int>& path) {
        if (path.size() + 1 < 4) return false;
        if (b != a && std::find(path.begin(), path.end(), b) == path.end()) return false;
        return true;
      });
      if (found) return true;
    }
  return false;
}

bool contains_structure(const Graph& g, StructureKind kind) {
  int n = g.order();
  if (prism_like(kind)) return contains_prism(g, kind);
  if (kind == StructureKind::lgs_ntk4 || kind == StructureKind::lgsb_k4) {
    // Anchored on four triangles; delegated to the detector-grade scan in
    // detectors.cpp via the subset validator would be circular, so use the
    // exhaustive subset scan under 64 vertices per connected component.
    // Gadget outputs keep each component's triangle count tiny, so the
    // detector-style scan below stays cheap.
    extern bool lgs_presence_scan(const Graph& g, bool bipartite_required);
    return lgs_presence_scan(g, kind == StructureKind::lgsb_k4);
  }
  if (kind == StructureKind::odd_hole || kind == StructureKind::long_hole) {
    MaskGraph m(g);  // throws above 64 — hole scans are desk-scale only
    for (int x = 0; x < n; ++x) {
      // Cycles anchored at their smallest vertex x: induced path between
      // two neighbors of x inside vertices > x, avoiding N(x) internally.
      const VertexSet& nx = g.neighbors(x);
      for (int p = nx.first(); p >= 0; p = nx.next(p)) {
        if (p < x) continue;
        for (int q = nx.next(p); q >= 0; q = nx.next(q)) {
          VertexSet allow(n);
          for (int v = x + 1; v < n; ++v) allow.set(v);
          allow -= g.neighbors(x);
          allow.set(p);
          allow.set(q);
          PathSearch s(g, allow, -1);
          bool found = s.run(p, q, [&](const std::vector<int>& path) {
            int cyc = (int)path.size() + 1;
            if (cyc < 5) return false;
            if (kind == StructureKind::odd_hole && cyc % 2 == 0) return false;
            return true;
          });
          if (found) return true;
        }
      }
    }
    return false;
  }
  // Remaining kinds: defer to the subset oracle with a relaxed guard.
  OracleLimits lim;
  lim.structure_guard = n;
  return find_structure_bf(g, kind, lim).has_value();
}

}  // namespace pg
