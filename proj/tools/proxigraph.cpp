// Command-line front end. Exit statuses: 0 pass, 2 parse or input error,
// 3 size cap, 4 audit failure, 5 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "proxigraph/cycle.hpp"
#include "proxigraph/errors.hpp"
#include "proxigraph/feasibility.hpp"
#include "proxigraph/formats.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/proximity.hpp"
#include "proxigraph/svg.hpp"
#include "proxigraph/verifier.hpp"
#include "proxigraph/witness_lab.hpp"

namespace pg = proxigraph;

namespace {

enum Exit { kPass = 0, kParse = 2, kCap = 3, kAuditFail = 4, kInternal = 5 };

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    pg::write_file_atomic(path, content);
  }
}

std::shared_ptr<const pg::PointSet> load_points(const std::string& path, std::string* bytes = nullptr) {
  std::string text = pg::read_file(path);
  auto points = std::make_shared<const pg::PointSet>(pg::parse_point_set(text).points);
  if (bytes) *bytes = std::move(text);
  return points;
}

pg::HamCycle minimal_cycle(const pg::PointSet& s, pg::SearchMode mode, std::uint64_t seed) {
  if (mode == pg::SearchMode::kLocal && s.size() >= 4) return pg::local_search_minimal(s, seed);
  return pg::brute_force_minimal(s);
}

struct BuildArgs {
  std::string graph = "kgg";
  int k = 0;
  std::string input, output;
};

int run_build(const BuildArgs& a) {
  if (a.k < 0) throw pg::ParseError("--k must be non-negative");
  const pg::GraphKind kind = pg::parse_graph_kind(a.graph);
  const auto points = load_points(a.input);
  std::optional<pg::GeometricGraph> g;
  switch (kind) {
    case pg::GraphKind::kGabriel: g = pg::build_k_gabriel(points, a.k); break;
    case pg::GraphKind::kRng: g = pg::build_k_rng(points, a.k); break;
    case pg::GraphKind::kDelaunay: g = pg::build_k_delaunay(points, a.k); break;
    case pg::GraphKind::kCustom: throw pg::ParseError("cannot build a custom graph");
  }
  emit(a.output, pg::format_graph(*g));
  return kPass;
}

struct CycleArgs {
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::string input, output;
};

int run_mincycle(const CycleArgs& a) {
  const auto points = load_points(a.input);
  const pg::HamCycle c = minimal_cycle(*points, pg::parse_search_mode(a.mode), a.seed);
  emit(a.output, pg::format_cycle(c, *points));
  return kPass;
}

struct VerifyArgs {
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::size_t k = pg::kTheoremK;
  double tol = pg::kPackingTolerance;
  std::string input, cycle, output;
};

int run_verify(const VerifyArgs& a) {
  if (!(a.tol > 0)) throw pg::ParseError("--tol must be positive");
  std::string bytes;
  const auto points = load_points(a.input, &bytes);
  const pg::SearchMode mode = pg::parse_search_mode(a.mode);
  const pg::HamCycle c =
      a.cycle.empty() ? minimal_cycle(*points, mode, a.seed) : pg::parse_cycle(pg::read_file(a.cycle), *points);
  pg::TheoremAudit audit = pg::audit_cycle(*points, c, a.k, a.tol);
  audit.mode = mode;
  audit.seed = a.seed;

  std::size_t failed = 0;
  for (const pg::EdgeAudit& e : audit.edges) failed += e.pass() ? 0 : 1;
  std::cerr << "points " << points->size() << ", mode " << pg::to_string(mode) << ", edges " << audit.edges.size()
            << ", max kappa " << audit.max_kappa << " (k = " << a.k << "), failing edges " << failed << '\n';
  for (const pg::EdgeAudit& e : audit.edges) {
    if (e.pass()) continue;
    std::cerr << "  edge " << e.x << "-" << e.y << ": kappa " << e.report.kappa() << (e.kappa_ok ? "" : " too large")
              << (e.inequalities_ok ? "" : ", inequality violated") << (e.packing_ok ? "" : ", packing failed") << '\n';
  }
  std::cerr << (audit.pass() ? "PASS" : "FAIL") << '\n';
  if (!a.output.empty()) emit(a.output, pg::format_audit(audit, bytes));
  return audit.pass() ? kPass : kAuditFail;
}

struct RenderArgs {
  std::string input, graph, cycle, circles, output;
};

int run_render(const RenderArgs& a) {
  const auto points = load_points(a.input);
  pg::RenderInput in;
  in.points = points.get();
  if (!a.graph.empty()) {
    const pg::GeometricGraph g = pg::parse_graph(pg::read_file(a.graph), points);
    in.graph_edges.assign(g.edges().begin(), g.edges().end());
  }
  if (!a.cycle.empty()) in.cycle = pg::parse_cycle(pg::read_file(a.cycle), *points);
  if (!a.circles.empty()) in.circles = pg::parse_edge_list(a.circles);
  emit(a.output, pg::render_svg(in));
  return kPass;
}

struct SearchArgs {
  std::size_t trials = 100;
  std::size_t n = 8;
  std::string gen = "uniform";
  std::uint64_t seed = 0;
  std::string output_dir;
};

int run_search(const SearchArgs& a) {
  const pg::SearchResult r = pg::random_search(a.trials, a.n, pg::parse_generator(a.gen), a.seed);
  bool all_pass = true;
  for (const pg::TrialOutcome& t : r.trials) all_pass = all_pass && t.pass;
  std::cerr << "trials " << r.trials.size() << ", max kappa " << r.best.kappa << " at trial " << r.best.trial
            << (all_pass ? ", all audits pass" : ", AUDIT FAILURES") << '\n';
  if (a.output_dir.empty()) {
    std::cout << pg::format_manifest(r, a.n, a.seed, "best.pts");
  } else {
    pg::write_witness_store(a.output_dir, r, a.n, a.seed);
  }
  return all_pass ? kPass : kAuditFail;
}

struct FeasArgs {
  std::size_t kappa = 1;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  std::size_t iterations = 20000;
  std::string output;
};

int run_feas(const FeasArgs& a) {
  if (a.kappa == 0) throw pg::ParseError("--kappa must be positive");
  pg::FeasibilityOptions o;
  o.restarts = a.restarts;
  o.seed = a.seed;
  o.max_iterations = a.iterations;
  const pg::FeasibilityResult r = pg::search_feasible(a.kappa, o);
  std::cerr << "kappa " << a.kappa << ", max residual " << r.max_residual << '\n';
  emit(a.output, pg::format_feasibility(pg::FeasibilitySystem(a.kappa), r));
  return kPass;
}

struct WitnessArgs {
  std::string name;
  std::string output, cycle_output;
};

int run_witness(const WitnessArgs& a) {
  if (a.name == "kappa6") {
    const pg::Construction c = pg::kappa6_construction();
    emit(a.output, pg::format_point_set(c.points));
    if (!a.cycle_output.empty()) emit(a.cycle_output, pg::format_cycle(c.cycle, c.points));
  } else {
    const pg::PointSet s = pg::build_non_hamiltonian_1gg();
    emit(a.output, pg::format_point_set(s));
    if (!a.cycle_output.empty()) emit(a.cycle_output, pg::format_cycle(pg::brute_force_minimal(s), s));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximity graphs, minimal Hamiltonian cycles and their exact audit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pg::kToolVersion);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a k-GG, k-RNG or k-DG");
  b->add_option("--graph", build.graph, "gabriel, kgg, krng or kdg")->capture_default_str();
  b->add_option("--k", build.k, "Order k >= 0")->capture_default_str();
  b->add_option("--input", build.input, "Point set file")->required();
  b->add_option("--output", build.output, "Graph file (default stdout)");

  CycleArgs cycle;
  auto* m = app.add_subcommand("mincycle", "Compute a ds-minimal Hamiltonian cycle");
  m->add_option("--mode", cycle.mode, "exact (n <= 11) or local")->capture_default_str();
  m->add_option("--seed", cycle.seed, "Local search start vertex seed")->capture_default_str();
  m->add_option("--input", cycle.input, "Point set file")->required();
  m->add_option("--output", cycle.output, "Cycle file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Audit every edge of the minimal cycle");
  v->add_option("--mode", verify.mode, "exact or local")->capture_default_str();
  v->add_option("--seed", verify.seed, "Local search seed")->capture_default_str();
  v->add_option("--k", verify.k, "Largest allowed kappa")->capture_default_str();
  v->add_option("--tol", verify.tol, "Packing tolerance")->capture_default_str();
  v->add_option("--input", verify.input, "Point set file")->required();
  v->add_option("--cycle", verify.cycle, "Audit this cycle instead of computing one");
  v->add_option("--output", verify.output, "Audit file");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw points, a graph, a cycle and diameter circles as SVG");
  r->add_option("--input", render.input, "Point set file")->required();
  r->add_option("--graph", render.graph, "Graph file");
  r->add_option("--cycle", render.cycle, "Cycle file");
  r->add_option("--circles", render.circles, "Edges as \"(i,j),(k,l)\"");
  r->add_option("--output", render.output, "SVG file (default stdout)");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Random search for large kappa on exact minimal cycles");
  s->add_option("--trials", search.trials, "Number of trials")->capture_default_str();
  s->add_option("--n", search.n, "Points per trial, 6..11")->capture_default_str();
  s->add_option("--gen", search.gen, "uniform, gaussian or clustered")->capture_default_str();
  s->add_option("--seed", search.seed, "Base seed")->capture_default_str();
  s->add_option("--output-dir", search.output_dir, "Witness store directory (default: manifest to stdout)");

  FeasArgs feas;
  auto* f = app.add_subcommand("feas", "Search for a feasible point of the inequality system");
  f->add_option("--kappa", feas.kappa, "Number of disk points")->required();
  f->add_option("--restarts", feas.restarts, "Random restarts")->capture_default_str();
  f->add_option("--seed", feas.seed, "Seed")->capture_default_str();
  f->add_option("--iterations", feas.iterations, "Descent iterations per start")->capture_default_str();
  f->add_option("--output", feas.output, "Report file (default stdout)");

  WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "Export a frozen construction");
  w->add_option("--name", witness.name, "kappa6 or nonham-1gg")
      ->required()
      ->check(CLI::IsMember({"kappa6", "nonham-1gg"}));
  w->add_option("--output", witness.output, "Point set file (default stdout)");
  w->add_option("--cycle-output", witness.cycle_output, "Also write its minimal cycle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*b) return run_build(build);
    if (*m) return run_mincycle(cycle);
    if (*v) return run_verify(verify);
    if (*r) return run_render(render);
    if (*s) return run_search(search);
    if (*f) return run_feas(feas);
    if (*w) return run_witness(witness);
  } catch (const pg::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const pg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const pg::Error& e) {
    // Invalid input that parsed: unknown names, too few points, bad indices.
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
