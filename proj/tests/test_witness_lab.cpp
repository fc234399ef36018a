#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "oracles.hpp"
#include "proxigraph/errors.hpp"
#include "proxigraph/feasibility.hpp"
#include "proxigraph/formats.hpp"
#include "proxigraph/verifier.hpp"
#include "proxigraph/witness_lab.hpp"
#include "support.hpp"

using namespace proxigraph;

namespace {

Assignment single(double ux, double uy, double sx, double sy, double tx, double ty) {
  return Assignment{{ux, uy, sx, sy, tx, ty}};
}

std::size_t violated_family_count(const FeasibilitySystem& sys, const Assignment& a, Family f, std::size_t i) {
  std::size_t n = 0;
  for (const Residual& r : residuals(sys, a)) {
    const Constraint& c = sys.constraints()[r.constraint];
    if (c.family == f && c.i == i && r.violation > 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("constraint counts") {
  for (std::size_t k = 1; k <= 12; ++k) {
    const FeasibilitySystem sys(k);
    const std::size_t pairs = k * (k - 1) / 2;
    CHECK(sys.constraints().size() == k + pairs + k + k + pairs + pairs + k);
    CHECK(sys.constraints().size() == FeasibilitySystem::expected_constraint_count(k));
    CHECK(sys.dimension() == 6 * k);
  }
  CHECK_THROWS_AS(FeasibilitySystem(0), Error);
}

TEST_CASE("residuals examples") {
  const FeasibilitySystem one(1);
  // u=(0,0), s=(1,0), t=(-3,0): every inequality holds, two of them with equality.
  CHECK(max_residual(one, single(0, 0, 1, 0, -3, 0)) == 0.0);
  // s=(0,0.5) is too close to x.
  const Assignment close = single(0, 0, 0, 0.5, -3, 0);
  CHECK(violated_family_count(one, close, Family::kSx, 0) == 1);
  double sx_violation = 0;
  for (const Residual& r : residuals(one, close)) {
    if (one.constraints()[r.constraint].family == Family::kSx) sx_violation = std::max(sx_violation, r.violation);
  }
  CHECK(sx_violation == doctest::Approx(4 - 1.25));

  const FeasibilitySystem two(2);
  Assignment a;
  a.values = {0, 0, 1, 0, -3, 0, 2, 0, 0, 3, 0, -3};
  CHECK(violated_family_count(two, a, Family::kUDisk, 1) == 1);
  CHECK(violated_family_count(two, a, Family::kUDisk, 0) == 0);

  CHECK_THROWS_AS(residuals(one, Assignment{{0, 0}}), DimensionMismatchError);
}

TEST_CASE("property: residuals vanish on minimal-cycle data") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PointSet s = seed % 2 ? random_point_set(9, Generator::kClustered, seed) : support::grid_points(9, 4, seed);
    const HamCycle c = brute_force_minimal(s);
    for (const Edge& e : c.edges()) {
      for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        const TraversalRecord r = extract_traversal(c, s, x, y);
        if (r.kappa() == 0) continue;
        const FeasibilitySystem sys(r.kappa());
        CHECK(max_residual(sys, assignment_from_traversal(s, r)) <= 1e-9);
      }
    }
  }
  // And on the thirteen-point construction, whose long edge has kappa = 6.
  const Construction f = kappa6_construction();
  const TraversalRecord r = extract_traversal(f.cycle, f.points, 0, 1);
  REQUIRE(r.kappa() == 6);
  CHECK(max_residual(FeasibilitySystem(6), assignment_from_traversal(f.points, r)) <= 1e-9);
}

TEST_CASE("search_feasible") {
  FeasibilityOptions o;
  o.restarts = 0;
  const FeasibilityResult one = search_feasible(1, o);
  CHECK(one.max_residual <= 1e-9);
  const FeasibilityResult six = search_feasible(6, o);
  CHECK(six.start == -1);
  CHECK(six.max_residual <= 1e-6);
  CHECK(max_residual(FeasibilitySystem(6), six.best) == six.max_residual);

  // Deterministic per seed.
  FeasibilityOptions r;
  r.restarts = 3;
  r.seed = 9;
  r.max_iterations = 500;
  const FeasibilityResult a = search_feasible(14, r), b = search_feasible(14, r);
  CHECK(a.best.values == b.best.values);
  CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("search_feasible reports without claiming for large kappa") {
  FeasibilityOptions o;
  o.restarts = 1;
  o.max_iterations = 300;
  const FeasibilityResult r = search_feasible(50, o);
  CHECK(r.best.values.size() == 300);
  CHECK(r.max_residual >= 0.0);
  CHECK(r.max_residual == max_residual(FeasibilitySystem(50), r.best));
}

TEST_CASE("kappa6 construction is verified from scratch") {
  const Construction f = kappa6_construction();
  REQUIRE(f.points.size() == 13);
  // Exact membership recount with the independent predicate.
  CHECK(oracle::disk_count(f.points, f.edge.a, f.edge.b) == 6);
  CHECK(kappa(f.points, f.edge.a, f.edge.b) == 6);
  const MinimalityCheck m = check_minimality(f.points, f.cycle, kUniquenessCap);
  CHECK(m.minimal);
  CHECK(m.equal_cycles == 1);
  CHECK(verify_long_edge_witness(f.points, f.cycle));
  // The long edge is outside the 5-Gabriel graph but inside the 6-Gabriel graph.
  CHECK_FALSE(build_k_gabriel(f.points, 5).has_edge(f.edge.a, f.edge.b));
  CHECK(build_k_gabriel(f.points, 6).has_edge(f.edge.a, f.edge.b));
  // The proof pipeline accepts it.
  const TheoremAudit a = audit_cycle(f.points, f.cycle);
  CHECK(a.pass());
  CHECK(a.max_kappa == 6);
}

TEST_CASE("verify_long_edge_witness rejects") {
  CHECK_FALSE(verify_long_edge_witness(support::unit_square(), HamCycle({0, 1, 2, 3})));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PointSet s = random_point_set(9, Generator::kUniform, seed);
    CHECK_FALSE(verify_long_edge_witness(s, brute_force_minimal(s)));
  }
  // A non-minimal cycle on the construction fails.
  const Construction f = kappa6_construction();
  std::vector<std::size_t> order = f.cycle.order();
  std::swap(order[3], order[5]);
  CHECK_FALSE(verify_long_edge_witness(f.points, HamCycle(order)));
  const PointSet big = random_point_set(15, Generator::kUniform, 1);
  std::vector<std::size_t> id(15);
  std::iota(id.begin(), id.end(), 0);
  CHECK_THROWS_AS(verify_long_edge_witness(big, HamCycle(id)), SizeCapError);
}

TEST_CASE("the frozen 1-GG is not Hamiltonian") {
  const PointSet s = build_non_hamiltonian_1gg();
  const std::size_t n = s.size();
  const GeometricGraph g1 = build_k_gabriel(s, 1);
  CHECK_FALSE(is_hamiltonian(g1).hamiltonian);

  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && oracle::disk_count(s, i, j) <= 1) adj[i].insert(j);
  CHECK_FALSE(oracle::hamiltonian(adj));

  const GeometricGraph half = build_k_gabriel(s, static_cast<int>((n + 1) / 2));
  CHECK(half.edges().size() == n * (n - 1) / 2);
  CHECK(is_hamiltonian(half).hamiltonian);

  // Under a rational similarity the property persists.
  std::vector<Point> moved;
  for (const Point& p : s) moved.emplace_back(p.x * Scalar(5, 3) - Scalar(1, 7), p.y * Scalar(5, 3) + 4);
  CHECK_FALSE(is_hamiltonian(build_k_gabriel(PointSet(moved), 1)).hamiltonian);
}

TEST_CASE("random_search is deterministic and replayable") {
  const SearchResult a = random_search(30, 8, Generator::kUniform, 42);
  REQUIRE(a.trials.size() == 30);
  for (const TrialOutcome& t : a.trials) {
    CHECK(t.pass);
    CHECK(t.max_kappa <= kTheoremK);
  }
  CHECK(replay_kappa(a.best) == a.best.kappa);
  CHECK(a.best.points == random_point_set(8, Generator::kUniform, a.best.seed));
  CHECK(kappa(a.best.points, a.best.edge.a, a.best.edge.b) == a.best.kappa);

  setenv("PROXIGRAPH_THREADS", "3", 1);
  const SearchResult b = random_search(30, 8, Generator::kUniform, 42);
  unsetenv("PROXIGRAPH_THREADS");
  REQUIRE(b.trials.size() == a.trials.size());
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    CHECK(a.trials[t].seed == b.trials[t].seed);
    CHECK(a.trials[t].max_kappa == b.trials[t].max_kappa);
  }
  CHECK(a.best.trial == b.best.trial);
  CHECK(a.best.cycle == b.best.cycle);

  CHECK_THROWS_AS(random_search(1, 12, Generator::kUniform, 0), SizeCapError);
  CHECK_THROWS_AS(random_search(1, 5, Generator::kUniform, 0), Error);
}

TEST_CASE("generators are deterministic and distinct") {
  for (Generator g : {Generator::kUniform, Generator::kGaussian, Generator::kClustered}) {
    CHECK(random_point_set(50, g, 3) == random_point_set(50, g, 3));
    CHECK_FALSE(random_point_set(50, g, 3) == random_point_set(50, g, 4));
    CHECK(parse_generator(to_string(g)) == g);
  }
  CHECK_THROWS_AS(parse_generator("poisson"), Error);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
}

TEST_CASE("frozen data files match the built-in constructions") {
  const std::string dir = PROXIGRAPH_DATA_DIR;
  const Construction f = kappa6_construction();
  const PointSet fig = parse_point_set(read_file(dir + "/kappa6.pts")).points;
  CHECK(fig == f.points);
  CHECK(parse_cycle(read_file(dir + "/kappa6.cycle"), fig) == f.cycle);
  CHECK(verify_long_edge_witness(fig, parse_cycle(read_file(dir + "/kappa6.cycle"), fig)));

  const PointSet nh = parse_point_set(read_file(dir + "/nonham_1gg.pts")).points;
  CHECK(nh == build_non_hamiltonian_1gg());
  CHECK_FALSE(is_hamiltonian(build_k_gabriel(nh, 1)).hamiltonian);
}
