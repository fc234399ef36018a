// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "oracles.hpp"
#include "proxigraph/cycle.hpp"
#include "proxigraph/feasibility.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/proximity.hpp"
#include "proxigraph/verifier.hpp"
#include "proxigraph/witness_lab.hpp"

using namespace proxigraph;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Every family except unit-disk membership, which the packing check covers.
bool six_families_hold(const InequalityReport& r) {
  for (const InequalityCheck& c : r.checks) {
    if (c.family != Family::kUDisk && !c.holds) return false;
  }
  return true;
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void theorem_suites() {
  const auto start = Clock::now();
  std::size_t edges = 0, bad_kappa = 0, bad_gg = 0, bad_ineq = 0, bad_pack = 0, worst = 0, most_disks = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const std::size_t n = 6 + t % 5;
    const PointSet s = random_point_set(n, Generator::kUniform, derive_seed(1001, t));
    const HamCycle m = brute_force_minimal(s);
    const GeometricGraph gg10 = build_k_gabriel(s, 10);
    for (const Edge& e : m.edges()) {
      for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        ++edges;
        const std::size_t k = kappa(s, x, y);
        worst = std::max(worst, k);
        if (k > kTheoremK) ++bad_kappa;
        if (!gg10.has_edge(x, y)) ++bad_gg;
        if (!six_families_hold(check_inequalities(s, m, x, y))) ++bad_ineq;
        const PackingWitness w = build_packing_witness(s, m, x, y);
        most_disks = std::max(most_disks, w.centers.size());
        if (w.centers.size() > kMaxPackedDisks || !verify_packing(w, 1e-9)) ++bad_pack;
      }
    }
  }
  const double secs = seconds_since(start);
  report(1, bad_kappa == 0 && bad_gg == 0 && secs < 300,
         "500 sets, " + std::to_string(edges) + " directed edges, max kappa " + std::to_string(worst) +
             ", outside 10-GG " + std::to_string(bad_gg) + fmt(", %.2f s", secs));
  report(2, bad_ineq == 0, "inequality violations " + std::to_string(bad_ineq));
  report(3, bad_pack == 0,
         "packing failures " + std::to_string(bad_pack) + ", most disks " + std::to_string(most_disks));
}

void nesting() {
  const auto start = Clock::now();
  std::size_t bad = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto s = std::make_shared<const PointSet>(random_point_set(12, Generator::kUniform, derive_seed(1004, t)));
    for (int k = 0; k <= 3; ++k) {
      const GeometricGraph rng = build_k_rng(s, k), gg = build_k_gabriel(s, k), dg = build_k_delaunay(s, k);
      const GeometricGraph next = build_k_gabriel(s, k + 1);
      if (!rng.is_subgraph_of(gg) || !gg.is_subgraph_of(dg) || !gg.is_subgraph_of(next)) ++bad;
    }
  }
  const double secs = seconds_since(start);
  report(4, bad == 0 && secs < 60, "failed inclusions " + std::to_string(bad) + fmt(", %.2f s", secs));
}

void completeness() {
  std::size_t bad = 0;
  const std::size_t sizes[] = {6, 8, 10};
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t n = sizes[t % 3];
    const PointSet s = random_point_set(n, Generator::kUniform, derive_seed(1005, t));
    const GeometricGraph dg = build_k_delaunay(s, static_cast<int>((n + 1) / 2));
    if (dg.edges().size() != n * (n - 1) / 2) ++bad;
  }
  report(5, bad == 0, "incomplete graphs " + std::to_string(bad) + " of 50");
}

void planarity() {
  std::size_t bad = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const PointSet s = random_point_set(6 + t % 25, Generator::kUniform, derive_seed(1006, t));
    if (!is_plane(build_k_gabriel(s, 0)) || !is_plane(build_k_rng(s, 0))) ++bad;
  }
  report(6, bad == 0, "non-plane graphs " + std::to_string(bad) + " of 100");
}

void bottleneck() {
  std::size_t bad = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const PointSet s = random_point_set(6 + t % 4, Generator::kUniform, derive_seed(1007, t));
    const DistanceSequence ds = distance_sequence(brute_force_minimal(s), s);
    if (ds.values.front() != oracle::bottleneck(s)) ++bad;
  }
  report(7, bad == 0, "mismatches " + std::to_string(bad) + " of 100");
}

void local_search() {
  std::size_t bad = 0, worst = 0;
  double slowest = 0, total = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const PointSet s = random_point_set(100, Generator::kUniform, derive_seed(1008, t));
    const auto start = Clock::now();
    const HamCycle c = local_search_minimal(s, t);
    bool ok = true;
    for (const Edge& e : c.edges()) {
      for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        const std::size_t k = kappa(s, x, y);
        worst = std::max(worst, k);
        if (k > kTheoremK || !six_families_hold(check_inequalities(s, c, x, y))) ok = false;
      }
    }
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    total += secs;
    if (!ok || secs >= 120) ++bad;
  }
  report(8, bad == 0,
         "failing sets " + std::to_string(bad) + ", max kappa " + std::to_string(worst) +
             fmt(", slowest %.2f s, total %.2f s", slowest, total));
}

void non_hamiltonian() {
  const auto start = Clock::now();
  const PointSet s = build_non_hamiltonian_1gg();
  const bool ham = is_hamiltonian(build_k_gabriel(s, 1)).hamiltonian;
  const double secs = seconds_since(start);
  report(9, !ham && secs < 10, "n " + std::to_string(s.size()) + fmt(", hamiltonian %g, %.3f s", ham, secs));
}

void feasibility() {
  const auto start = Clock::now();
  // u = (0,0), s = (1,0) on y, t = (-3,0).
  const double hand = max_residual(FeasibilitySystem(1), Assignment{{0, 0, 1, 0, -3, 0}});
  FeasibilityOptions o;
  o.restarts = 0;
  const FeasibilityResult six = search_feasible(6, o);
  const double secs = seconds_since(start);
  report(10, hand == 0.0 && six.start == -1 && six.max_residual <= 1e-6 && secs < 60,
         fmt("kappa 1 residual %g, kappa 6 residual %g", hand, six.max_residual) + fmt(", %.2f s", secs));
}

void oracles() {
  std::size_t bf_bad = 0, ham_bad = 0, dg_bad = 0, ham_yes = 0;
  for (std::uint64_t t = 0; t < 60; ++t) {
    const std::size_t n = 4 + t % 5;  // 4..8
    const PointSet s = random_point_set(n, t % 2 ? Generator::kClustered : Generator::kUniform, derive_seed(1011, t));

    const oracle::Minimal ref = oracle::minimal(s);
    const HamCycle m = brute_force_minimal(s);
    bool found = false;
    for (const auto& order : ref.cycles) found = found || HamCycle(order) == m;
    if (!found || distance_sequence(m, s).values != ref.ds) ++bf_bad;

    std::mt19937_64 rng(derive_seed(2011, t));
    std::bernoulli_distribution coin(0.3 + 0.1 * static_cast<double>(t % 5));
    GeometricGraph g(std::make_shared<const PointSet>(s), GraphKind::kCustom, 0);
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) {
          g.add_edge(i, j);
          adj[i].insert(j);
          adj[j].insert(i);
        }
    const HamiltonicityResult h = is_hamiltonian(g);
    const bool truth = oracle::hamiltonian(adj);
    ham_yes += truth;
    if (h.hamiltonian != truth) ++ham_bad;
    if (h.hamiltonian && h.cycle) {
      for (const Edge& e : h.cycle->edges()) {
        if (!g.has_edge(e.a, e.b)) ++ham_bad;
      }
    }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && min_enclosing_count(s, i, j) != oracle::kdg_count(s, i, j)) ++dg_bad;
  }
  report(11, bf_bad == 0 && ham_bad == 0 && dg_bad == 0,
         "60 instances each: minimal " + std::to_string(bf_bad) + ", hamiltonian " + std::to_string(ham_bad) + " (" +
             std::to_string(ham_yes) + " yes), k-DG " + std::to_string(dg_bad) + " mismatches");
}

}  // namespace

int main() {
  theorem_suites();
  nesting();
  completeness();
  planarity();
  bottleneck();
  local_search();
  non_hamiltonian();
  feasibility();
  oracles();
  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
