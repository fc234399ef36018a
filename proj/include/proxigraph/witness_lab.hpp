#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxigraph/cycle.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/geometry.hpp"
#include "proxigraph/proximity.hpp"

namespace proxigraph {

/// A point set with an edge of its minimal cycle, plus what is needed to
/// regenerate it.
struct Witness {
  PointSet points;
  HamCycle cycle;
  Edge edge;
  std::size_t kappa = 0;
  std::uint64_t seed = 0;  ///< seed passed to random_point_set
  Generator generator = Generator::kUniform;
  std::size_t trial = 0;
};

struct TrialOutcome {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t max_kappa = 0;
  bool pass = false;  ///< the exact audit passed
};

struct SearchResult {
  std::vector<TrialOutcome> trials;  ///< indexed by trial
  Witness best;                      ///< first trial reaching the largest kappa
};

/// Runs the exact audit on `trials` random sets of n points; trial t uses
/// derive_seed(seed, t). Results do not depend on the worker count.
/// Requires 6 <= n <= 11 and trials >= 1.
SearchResult random_search(std::size_t trials, std::size_t n, Generator generator, std::uint64_t seed);

/// Recomputes the minimal cycle of the stored set and returns its largest kappa.
std::size_t replay_kappa(const Witness& w);

/// A frozen construction: points, a Hamiltonian cycle, and a distinguished edge.
struct Construction {
  PointSet points;
  HamCycle cycle;
  Edge edge;
};

/// True iff c is the unique ds-minimal cycle of s and some edge of c has
/// kappa >= 6. Uniqueness is decided exhaustively by check_minimality, so
/// s may have up to 14 points; larger inputs throw SizeCapError.
bool verify_long_edge_witness(const PointSet& s, const HamCycle& c);

inline constexpr std::size_t kUniquenessCap = 14;

/// Thirteen points whose unique minimal cycle has an edge xy with six points
/// of the set in its diameter disk: x = (-1,0), y = (1,0), u_1..u_6 inside
/// the disk and s_2..s_6 outside, visited x y u_1 s_2 u_2 ... s_6 u_6.
Construction kappa6_construction();

/// Five points whose 1-Gabriel graph is not Hamiltonian: a = (0,1), b = (0,-1)
/// and three far points z_i, each pair of which has a and b in its diameter
/// disk. The 1-GG is then contained in K_{2,3} plus the edge ab.
PointSet build_non_hamiltonian_1gg();

}  // namespace proxigraph
