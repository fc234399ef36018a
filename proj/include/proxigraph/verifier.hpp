#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proxigraph/cycle.hpp"
#include "proxigraph/geometry.hpp"

namespace proxigraph {

/// The seven inequality families a minimal cycle satisfies around each of
/// its edges xy, in the frame where |xy| = 2:
///   kSx      d(s_i, x)   >= max{d(s_i, u_i), 2}
///   kSs      d(s_i, s_j) >= max{d(s_i, u_i), d(s_j, u_j), 2}        i < j
///   kTy      d(t_i, y)   >= max{d(t_i, u_i), 2}
///   kSt      d(s_i, t_i) >= max{d(s_i, u_i), d(t_i, u_i), 2}
///   kTt      d(t_i, t_j) >= max{d(t_i, u_i), d(t_j, u_j), 2}        i < j
///   kStCross d(s_i, t_j) >= max{d(s_i, u_i), d(t_j, u_j), 2}        i < j
///   kUDisk   u_i lies in the closed disk with diameter xy
enum class Family { kSx = 1, kSs, kTy, kSt, kTt, kStCross, kUDisk };

inline constexpr int kFamilyCount = 7;

std::string to_string(Family family);

struct InequalityCheck {
  Family family = Family::kSx;
  std::size_t i = 0;      ///< position in U (0-based)
  std::size_t j = 0;      ///< second position for pair families, else == i
  std::size_t lhs_a = 0;  ///< point indices of the left-hand distance
  std::size_t lhs_b = 0;
  bool holds = false;
  /// Squared left side minus the largest squared right-hand operand, in the
  /// input's squared units (the constant 2 scales to |xy|). For kUDisk it is
  /// |xy|^2/4 - |u - mid(xy)|^2.
  Scalar slack;
};

struct InequalityReport {
  TraversalRecord traversal;
  std::vector<InequalityCheck> checks;

  std::size_t kappa() const { return traversal.kappa(); }
  bool all_hold() const;
  bool family_holds(Family family) const;
  std::vector<InequalityCheck> violations() const;
};

/// Number of points other than p_i, p_j in the closed disk with diameter p_i p_j.
std::size_t kappa(const PointSet& s, std::size_t i, std::size_t j);

/// Evaluates every instance of the seven families exactly for the edge
/// x = p_i -> y = p_j. Throws EdgeNotInCycleError.
InequalityReport check_inequalities(const PointSet& s, const HamCycle& c, std::size_t i, std::size_t j);

/// Unit disks D_0..D_kappa in the normalized edge frame: D_0 at x, D_i at s_i,
/// or at its radial projection onto the circle of radius 3 when |s_i| > 3.
struct PackingWitness {
  std::vector<FloatPoint> frame;    ///< all points, normalized
  std::vector<FloatPoint> centers;  ///< centers[0] = (-1, 0)
  std::vector<bool> projected;      ///< per center: moved onto radius 3
};

PackingWitness build_packing_witness(const PointSet& s, const HamCycle& c, std::size_t i, std::size_t j);

/// Twelve unit disks do not fit in a circle of radius 4 (the smallest such
/// circle has radius above 4.029), so a valid witness has at most eleven.
inline constexpr std::size_t kMaxPackedDisks = 11;

/// All centers within 3 + tol of the origin, pairwise at least 2 - tol
/// apart, and at most kMaxPackedDisks of them.
bool verify_packing(const PackingWitness& w, double tol);

enum class SearchMode { kExact, kLocal };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& name);

struct EdgeAudit {
  Edge edge;
  std::size_t x = 0;
  std::size_t y = 0;
  InequalityReport report;
  PackingWitness witness;
  bool kappa_ok = false;
  bool inequalities_ok = false;
  bool packing_ok = false;
  /// Normalized points within 1e-9 of the unit circle; their float
  /// membership cannot be trusted, so they are reported rather than failed.
  std::size_t boundary_points = 0;
  /// Exact kappa agrees with the float unit-disk count away from the boundary.
  bool normalization_consistent = false;

  bool pass() const { return kappa_ok && inequalities_ok && packing_ok; }
};

struct TheoremAudit {
  SearchMode mode = SearchMode::kExact;
  std::uint64_t seed = 0;
  std::size_t k = 10;
  double tol = 1e-9;
  HamCycle cycle;
  std::vector<EdgeAudit> edges;
  std::size_t max_kappa = 0;

  bool pass() const;
};

inline constexpr std::size_t kTheoremK = 10;
inline constexpr double kPackingTolerance = 1e-9;

/// Audits every edge of a given cycle, oriented along the cycle.
TheoremAudit audit_cycle(const PointSet& s, const HamCycle& c, std::size_t k = kTheoremK,
                         double tol = kPackingTolerance);

/// Computes the minimal (exact) or locally minimal (local) cycle and audits it.
TheoremAudit verify_theorem(const PointSet& s, SearchMode mode, std::uint64_t seed = 0, std::size_t k = kTheoremK,
                            double tol = kPackingTolerance);

}  // namespace proxigraph
