#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "proxigraph/geometry.hpp"
#include "proxigraph/proximity.hpp"

namespace proxigraph {

/// A Hamiltonian cycle stored in canonical form: it starts at index 0 and
/// continues toward the smaller of 0's two neighbours. Two cycles compare
/// equal iff they are the same cyclic sequence up to rotation and reflection.
class HamCycle {
 public:
  HamCycle() = default;
  /// Throws Error unless `order` is a permutation of 0..n-1.
  explicit HamCycle(std::vector<std::size_t> order);

  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  std::size_t next(std::size_t vertex) const;
  std::size_t prev(std::size_t vertex) const;
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Edges in traversal order: (order[k], order[k+1]).
  std::vector<Edge> edges() const;

  friend bool operator==(const HamCycle& a, const HamCycle& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const HamCycle& a, const HamCycle& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
};

/// Squared edge lengths of a cycle, sorted non-increasing. Comparing these
/// lexicographically orders cycles exactly as comparing the lengths would.
struct DistanceSequence {
  std::vector<Scalar> values;

  friend bool operator==(const DistanceSequence&, const DistanceSequence&) = default;
  friend std::strong_ordering operator<=>(const DistanceSequence& a, const DistanceSequence& b);
};

/// Throws IndexError when the cycle does not span exactly the point set.
DistanceSequence distance_sequence(const HamCycle& c, const PointSet& s);

/// greater: a is the heavier cycle; equal: identical distance sequences.
std::strong_ordering compare_cycles(const HamCycle& a, const HamCycle& b, const PointSet& s);

/// Dense ranks of the pairwise squared distances: rank(i,j) < rank(k,l) iff
/// |p_i p_j| < |p_k p_l|, with equal ranks for equal distances. Distance
/// sequences can then be compared on small integers without loss.
class DistanceRanks {
 public:
  explicit DistanceRanks(const PointSet& s);

  std::size_t size() const { return n_; }
  std::int32_t operator()(std::size_t i, std::size_t j) const { return rank_[i * n_ + j]; }
  std::int32_t distinct() const { return distinct_; }

 private:
  std::size_t n_;
  std::int32_t distinct_ = 0;
  std::vector<std::int32_t> rank_;
};

inline constexpr std::size_t kExactCycleCap = 11;

/// The ds-minimal cycle with the smallest canonical order among ties,
/// found by exhaustive branch and bound. Requires 3 <= n <= 11.
HamCycle brute_force_minimal(const PointSet& s);

struct MinimalityCheck {
  bool minimal = false;           ///< no cycle has a smaller distance sequence
  std::size_t equal_cycles = 0;   ///< cycles (the candidate included) with the same sequence
  std::optional<HamCycle> better; ///< a strictly smaller cycle, when one exists
};

/// Exhaustively decides whether `candidate` is ds-minimal and counts its
/// ds-equal rivals. Pruning against the candidate keeps this practical well
/// beyond the enumeration cap; `max_points` bounds the input size.
MinimalityCheck check_minimality(const PointSet& s, const HamCycle& candidate, std::size_t max_points = 14);

/// Local search under the 2-opt, vertex-relocation and 3-edge-exchange moves,
/// first improvement, restarting the scan after each accepted move. The
/// greedy nearest-neighbour start is taken from vertex seed mod n. Requires n >= 4.
HamCycle local_search_minimal(const PointSet& s, std::uint64_t seed = 0);

/// The walk along a cycle that starts with the directed edge x -> y and
/// returns to x, restricted to the points in the closed disk with diameter xy.
struct TraversalRecord {
  std::size_t x = 0;
  std::size_t y = 0;
  std::vector<std::size_t> u;  ///< disk points in the order met
  std::vector<std::size_t> s;  ///< predecessor of each u (s[0] may be y)
  std::vector<std::size_t> t;  ///< successor of each u (t.back() may be x)

  std::size_t kappa() const { return u.size(); }
};

/// Throws EdgeNotInCycleError when (i, j) is not an edge of c.
TraversalRecord extract_traversal(const HamCycle& c, const PointSet& s, std::size_t i, std::size_t j);

struct HamiltonicityResult {
  bool hamiltonian = false;
  std::optional<HamCycle> cycle;
};

/// Exact decision. Uses a bitmask dynamic program up to kBitmaskLimit
/// vertices and pruned backtracking beyond. Requires n >= 3.
HamiltonicityResult is_hamiltonian(const GeometricGraph& g);

inline constexpr std::size_t kBitmaskLimit = 20;

namespace detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::optional<std::vector<std::size_t>> hamiltonian_cycle_bitmask(const Adjacency& adj);
std::optional<std::vector<std::size_t>> hamiltonian_cycle_backtracking(const Adjacency& adj);

}  // namespace detail

}  // namespace proxigraph
