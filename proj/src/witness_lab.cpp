#include "proxigraph/witness_lab.hpp"

#include <array>
#include <string>

#include "proxigraph/errors.hpp"
#include "proxigraph/parallel.hpp"
#include "proxigraph/verifier.hpp"

namespace proxigraph {

namespace {

PointSet from_text(std::span<const std::array<const char*, 2>> rows) {
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const auto& [x, y] : rows) pts.emplace_back(parse_scalar(x), parse_scalar(y));
  return PointSet(std::move(pts));
}

}  // namespace

SearchResult random_search(std::size_t trials, std::size_t n, Generator generator, std::uint64_t seed) {
  if (n > kExactCycleCap) {
    throw SizeCapError("random search runs the exact audit, which is capped at " + std::to_string(kExactCycleCap) +
                       " points (got " + std::to_string(n) + ")");
  }
  if (n < 6) throw Error("random search needs n >= 6 (got " + std::to_string(n) + ")");
  if (trials == 0) throw Error("random search needs at least one trial");

  struct Slot {
    TrialOutcome outcome;
    PointSet points;
    HamCycle cycle;
    Edge edge;
  };
  std::vector<Slot> slots(trials);
  parallel_for(trials, [&](std::size_t t) {
    Slot& slot = slots[t];
    slot.outcome.trial = t;
    slot.outcome.seed = derive_seed(seed, t);
    slot.points = random_point_set(n, generator, slot.outcome.seed);
    const TheoremAudit audit = verify_theorem(slot.points, SearchMode::kExact);
    slot.outcome.max_kappa = audit.max_kappa;
    slot.outcome.pass = audit.pass();
    slot.cycle = audit.cycle;
    for (const EdgeAudit& e : audit.edges) {
      if (e.report.kappa() == audit.max_kappa) {
        slot.edge = e.edge;
        break;
      }
    }
  });

  SearchResult result;
  result.trials.reserve(trials);
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    result.trials.push_back(slots[t].outcome);
    if (slots[t].outcome.max_kappa > slots[best].outcome.max_kappa) best = t;
  }
  Slot& b = slots[best];
  result.best = Witness{std::move(b.points), std::move(b.cycle), b.edge, b.outcome.max_kappa,
                        b.outcome.seed, generator, best};
  return result;
}

std::size_t replay_kappa(const Witness& w) { return verify_theorem(w.points, SearchMode::kExact).max_kappa; }

bool verify_long_edge_witness(const PointSet& s, const HamCycle& c) {
  if (s.size() > kUniquenessCap) {
    throw SizeCapError("uniqueness check is capped at " + std::to_string(kUniquenessCap) + " points (got " +
                       std::to_string(s.size()) + ")");
  }
  const MinimalityCheck m = check_minimality(s, c, kUniquenessCap);
  if (!m.minimal || m.equal_cycles != 1) return false;
  for (const Edge& e : c.edges()) {
    if (kappa(s, e.a, e.b) >= 6) return true;
  }
  return false;
}

Construction kappa6_construction() {
  static constexpr std::array<std::array<const char*, 2>, 13> kRows{{
      {"-1", "0"},          // x
      {"1", "0"},           // y
      {"-17/20", "-8/25"},  // u_1
      {"-19/25", "-49/100"},
      {"-3/20", "-22/25"},
      {"59/100", "-9/100"},
      {"-19/25", "47/100"},
      {"-9/10", "1/10"},        // u_6
      {"-261/100", "-63/50"},   // s_2
      {"-97/100", "-62/25"},
      {"103/100", "-51/25"},
      {"3/20", "93/50"},
      {"-19/10", "46/25"},  // s_6
  }};
  return Construction{from_text(kRows), HamCycle({0, 1, 2, 8, 3, 9, 4, 10, 5, 11, 6, 12, 7}), Edge(0, 1)};
}

PointSet build_non_hamiltonian_1gg() {
  static constexpr std::array<std::array<const char*, 2>, 5> kRows{{
      {"0", "1"},
      {"0", "-1"},
      {"0", "10"},
      {"-9", "-5"},
      {"9", "-5"},
  }};
  return from_text(kRows);
}

}  // namespace proxigraph
