// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: recognize / color / census / detect / gadget.
// Default output is deterministic machine JSON (byte-identical for
// identical input and flags); timing goes to stderr.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pg/artemis.hpp"
#include "pg/detectors.hpp"
#include "pg/gadgets.hpp"
#include "pg/graph.hpp"
#include "pg/oracles.hpp"
#include "pg/parity.hpp"
#include "pg/recognizers.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

pg::Graph parse_graph(const std::string& text, const std::string& format) {
  std::string first;
  std::istringstream in(text);
  std::getline(in, first);
  if (format == "edgelist") return pg::parse_edge_list(text);
  return pg::parse_graph6(first);
}

ordered_json witness_json(const pg::Witness& w) {
  ordered_json j;
  j["kind"] = pg::structure_kind_name(w.kind);
  j["vertices"] = w.vertices.to_vector();
  ordered_json roles = ordered_json::object();
  for (const auto& [name, vs] : w.roles) roles[name] = vs;
  j["roles"] = roles;
  return j;
}

struct Ctx {
  std::string input_path;
  std::string format = "g6";
  int guard = 0;  // 0 = defaults
  int workers = 1;
  bool verbose = false;

  pg::OracleLimits limits() const {
    pg::OracleLimits lim;
    if (guard > 0) {
      lim.structure_guard = guard;
      lim.membership_guard = guard;
      lim.partitionable_guard = guard;
    }
    return lim;
  }
};

void emit(const ordered_json& report, const Ctx& ctx,
          std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << report.dump(2) << "\n";
  std::cerr << "elapsed_ms " << ms << "\n";
  if (ctx.verbose) {
    std::cerr << "command: " << report.value("command", std::string{}) << "\n";
    if (report.contains("verdict"))
      std::cerr << "verdict: " << report["verdict"].get<std::string>() << "\n";
  }
}

int run_recognize(const Ctx& ctx, const std::string& cls) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = read_input(ctx.input_path);
  pg::Graph g = parse_graph(text, ctx.format);
  pg::OracleLimits lim = ctx.limits();

  pg::RecognitionResult r;
  if (cls == "artemis") r = pg::recognize_artemis(g, lim);
  else if (cls == "even-artemis") r = pg::recognize_even_artemis(g, lim);
  else if (cls == "bipartisan") r = pg::recognize_bipartisan(g, lim);
  else if (cls == "weakly-triangulated") r = pg::recognize_weakly_triangulated(g);
  else throw CLI::ValidationError("unknown class: " + cls);

  ordered_json report;
  report["command"] = "recognize " + cls;
  report["input_digest"] = fnv1a_hex(text);
  const char* verdict =
      r.verdict == pg::RecognitionResult::Verdict::member       ? "member"
      : r.verdict == pg::RecognitionResult::Verdict::non_member ? "non-member"
                                                                : "undecided";
  report["verdict"] = verdict;
  if (r.witness) {
    report["witness"] = witness_json(*r.witness);
    report["witness_in_complement"] = r.witness_in_complement;
  }
  report["notes"] = r.notes;
  emit(report, ctx, t0);
  switch (r.verdict) {
    case pg::RecognitionResult::Verdict::member: return kExitMember;
    case pg::RecognitionResult::Verdict::non_member: return kExitNonMember;
    default: return kExitUndecided;
  }
}

int run_color(const Ctx& ctx, int verify_guard) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = read_input(ctx.input_path);
  pg::Graph g = parse_graph(text, ctx.format);
  pg::ColorResult r = pg::artemis_color(g, verify_guard);

  ordered_json report;
  report["command"] = "color";
  report["input_digest"] = fnv1a_hex(text);
  report["colors"] = r.coloring.color;
  report["palette"] = r.coloring.palette;
  report["clique"] = r.clique.to_vector();
  report["certified"] = r.optimal_certified;
  ordered_json steps = ordered_json::array();
  for (const auto& st : r.trace.steps)
    steps.push_back({{"x", st.x}, {"y", st.y}, {"representative", st.representative}});
  report["trace"] = steps;
  emit(report, ctx, t0);
  return r.optimal_certified ? kExitMember : kExitNonMember;
}

int run_census(const Ctx& ctx, int n, bool expensive) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    pg::CensusTable table = pg::census(n, ctx.workers, expensive, ctx.limits());
    std::cout << table.to_csv();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed_ms " << ms << "\n";
    return kExitMember;
  } catch (const std::invalid_argument& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::length_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUndecided;
  }
}

int run_detect(const Ctx& ctx, const std::string& kind) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = read_input(ctx.input_path);
  pg::Graph g = parse_graph(text, ctx.format);

  pg::DetectionResult r;
  if (kind == "long-hole") r = pg::detect_min_long_hole(g);
  else if (kind == "prism-or-pyramid" || kind == "prism" || kind == "pyramid")
    r = pg::detect_prism_or_pyramid(g);
  else if (kind == "long-prism") r = pg::detect_long_prism(g);
  else if (kind == "even-prism") r = pg::detect_even_prism(g);
  else if (kind == "odd-prism") r = pg::detect_odd_prism(g);
  else if (kind == "lgs-ntk4") r = pg::detect_lgs_ntk4(g);
  else if (kind == "lgsb-k4") r = pg::detect_lgsb_k4(g);
  else throw CLI::ValidationError("unknown structure kind: " + kind);

  ordered_json report;
  report["command"] = "detect " + kind;
  report["input_digest"] = fnv1a_hex(text);
  report["present"] = r.present;
  if (r.witness) report["witness"] = witness_json(*r.witness);
  report["assumed_preconditions"] = r.assumed_preconditions;
  emit(report, ctx, t0);
  return r.present ? kExitMember : kExitNonMember;
}

int run_gadget(const Ctx& ctx, const std::string& sub) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = read_input(ctx.input_path);
  pg::CnfFormula f = pg::parse_dimacs(text);
  pg::PiInstance inst = pg::build_pi_instance(f);
  if (sub == "pi") {
    std::cout << pg::serialize_graph6(inst.graph) << "\n";
    std::cout << pg::pi_instance_sidecar_json(inst);
  } else {
    auto kind = pg::reduction_kind_from_name(sub);
    if (!kind) throw CLI::ValidationError("unknown gadget kind: " + sub);
    pg::ReductionOutput out = pg::reduce_pi(*kind, inst);
    std::cout << pg::serialize_graph6(out.combined) << "\n";
    ordered_json j;
    j["command"] = "gadget " + sub;
    j["input_digest"] = fnv1a_hex(text);
    j["target"] = pg::structure_kind_name(out.target);
    ordered_json parts = ordered_json::array();
    for (const auto& p : out.parts) parts.push_back(pg::serialize_graph6(p));
    j["parts"] = parts;
    ordered_json roles = ordered_json::object();
    for (const auto& [name, v] : out.labels) roles[name] = v;
    j["roles_part0"] = roles;
    std::cout << j.dump(2) << "\n";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed_ms " << ms << "\n";
  return kExitMember;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect-graph toolkit: recognition, coloring, detection, gadgets"};
  app.require_subcommand(1);

  Ctx ctx;
  if (const char* env = std::getenv("PG_GUARD")) ctx.guard = std::atoi(env);
  app.add_option("--guard", ctx.guard, "oracle size guard override (env PG_GUARD)");
  app.add_option("--format", ctx.format, "input format: g6 | edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));
  app.add_flag("--verbose", ctx.verbose, "human-readable summary on stderr");

  std::string cls, kind, sub;
  int census_n = 5;
  bool expensive = false;
  int verify_guard = 0;

  CLI::App* rec = app.add_subcommand("recognize", "class membership with witness");
  rec->add_option("class", cls, "artemis | even-artemis | bipartisan | weakly-triangulated")
      ->required();
  rec->add_option("input", ctx.input_path, "graph file or -")->required();

  CLI::App* col = app.add_subcommand("color", "even-pair contraction coloring");
  col->add_option("input", ctx.input_path, "graph file or -")->required();
  col->add_option("--verify-guard", verify_guard,
                  "brute-force-check contraction pairs up to this order");

  CLI::App* cen = app.add_subcommand("census", "per-class counts of small graphs");
  cen->add_option("n", census_n, "maximum order (<= 7)")->required();
  cen->add_option("--workers", ctx.workers, "classification threads");
  cen->add_flag("--expensive", expensive, "include contraction-flavored columns at n=7");

  CLI::App* det = app.add_subcommand("detect", "structure detection with witness");
  det->add_option("kind", kind,
                  "long-hole | prism-or-pyramid | long-prism | even-prism | odd-prism | "
                  "lgs-ntk4 | lgsb-k4")
      ->required();
  det->add_option("input", ctx.input_path, "graph file or -")->required();

  CLI::App* gad = app.add_subcommand("gadget", "hardness constructions from DIMACS cnf");
  gad->add_option("kind", sub, "pi | prism | odd-prism | even-prism | lgs-k4 | lgsb-k4")
      ->required();
  gad->add_option("input", ctx.input_path, "cnf file or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (rec->parsed()) return run_recognize(ctx, cls);
    if (col->parsed()) return run_color(ctx, verify_guard);
    if (cen->parsed()) return run_census(ctx, census_n, expensive);
    if (det->parsed()) return run_detect(ctx, kind);
    if (gad->parsed()) return run_gadget(ctx, sub);
  } catch (const std::length_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
