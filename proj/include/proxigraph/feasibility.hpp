#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxigraph/cycle.hpp"
#include "proxigraph/verifier.hpp"

namespace proxigraph {

/// A point of the normalized edge frame referenced by a constraint: one of
/// the fixed endpoints x = (-1,0), y = (1,0), or u_i / s_i / t_i.
struct PointRef {
  enum class Role { kX, kY, kU, kS, kT } role = Role::kX;
  std::size_t index = 0;
};

/// One scalar inequality g(v) >= 0, with g one of
///   |a - b|^2 - |c - d|^2      (kDistance)
///   |a - b|^2 - 4              (kFrame, the constant 2 squared)
///   1 - |a|^2                  (kUnitDisk)
struct Term {
  enum class Kind { kDistance, kFrame, kUnitDisk } kind = Kind::kDistance;
  PointRef a, b, c, d;
};

/// One instance of an inequality family; its right-hand max{...} expands
/// into one term per operand.
struct Constraint {
  Family family = Family::kSx;
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Term> terms;
};

/// Quadratic system over the 6*kappa coordinates of u_i, s_i, t_i.
/// Variable layout: 6*i + {0: u.x, 1: u.y, 2: s.x, 3: s.y, 4: t.x, 5: t.y}.
class FeasibilitySystem {
 public:
  explicit FeasibilitySystem(std::size_t kappa);

  std::size_t kappa() const { return kappa_; }
  std::size_t dimension() const { return 6 * kappa_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t term_count() const;

  /// 4*kappa + 3*C(kappa, 2): the number of constraint instances.
  static std::size_t expected_constraint_count(std::size_t kappa);

 private:
  std::size_t kappa_;
  std::vector<Constraint> constraints_;
};

struct Assignment {
  std::vector<double> values;
};

struct Residual {
  std::size_t constraint = 0;  ///< index into constraints()
  std::size_t term = 0;        ///< index into that constraint's terms
  double violation = 0.0;      ///< max(0, -g(v))
};

/// One entry per term. Throws DimensionMismatchError unless the assignment
/// has 6*kappa values.
std::vector<Residual> residuals(const FeasibilitySystem& sys, const Assignment& a);
double max_residual(const FeasibilitySystem& sys, const Assignment& a);

/// Normalized coordinates of u_i, s_i, t_i for an edge of a cycle. On the
/// data of a minimal cycle every residual vanishes up to rounding.
Assignment assignment_from_traversal(const PointSet& s, const TraversalRecord& r);

struct FeasibilityOptions {
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 20000;
  /// Terms are pushed to g >= margin during descent so the reported
  /// (margin-free) residuals land at exactly zero when the region has interior.
  double margin = 1e-2;
};

struct FeasibilityResult {
  Assignment best;
  double max_residual = 0.0;
  /// -1 for the structured start, otherwise the random restart index.
  long start = -1;
};

/// Multi-start penalty descent on the sum of squared violations: one
/// structured start (a chain of fanned-out s/t points around an arc of u's)
/// then random restarts, stopping early once a start reaches zero residual.
/// Best effort: a positive result never proves infeasibility.
FeasibilityResult search_feasible(std::size_t kappa, const FeasibilityOptions& options = {});

/// The structured start on its own.
Assignment structured_start(std::size_t kappa);

}  // namespace proxigraph
