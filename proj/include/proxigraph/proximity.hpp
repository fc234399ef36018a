#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

enum class GraphKind { kGabriel, kRng, kDelaunay, kCustom };

std::string to_string(GraphKind kind);
/// Accepts "kgg", "krng", "kdg", "custom" (and "gabriel" as kgg).
GraphKind parse_graph_kind(const std::string& name);

/// Unordered index pair stored as (min, max).
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  Edge() = default;
  Edge(std::size_t i, std::size_t j) : a(std::min(i, j)), b(std::max(i, j)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge set over a shared point set. Edges are kept sorted by index pair.
class GeometricGraph {
 public:
  GeometricGraph(std::shared_ptr<const PointSet> points, GraphKind kind, int k);

  /// Throws IndexError on out-of-range or equal endpoints.
  void add_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const;

  const PointSet& points() const { return *points_; }
  std::shared_ptr<const PointSet> shared_points() const { return points_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return points_->size(); }
  GraphKind kind() const { return kind_; }
  int k() const { return k_; }

  std::vector<std::vector<std::size_t>> adjacency() const;

  /// Edge-set inclusion; point sets must be the same object or equal.
  bool is_subgraph_of(const GeometricGraph& other) const;

 private:
  std::shared_ptr<const PointSet> points_;
  GraphKind kind_;
  int k_;
  std::set<Edge> edges_;
};

/// Number of points of s other than p_i, p_j inside the closed disk with
/// diameter p_i p_j.
std::size_t gabriel_witness_count(const PointSet& s, std::size_t i, std::size_t j);

/// Number of points strictly inside the lune of p_i p_j.
std::size_t lune_count(const PointSet& s, std::size_t i, std::size_t j);

/// Smallest number of other points enclosed by a closed disk with p_i and
/// p_j on its boundary.
///
/// Disk centers run along the perpendicular bisector as m + t * perp(p_j - p_i).
/// Point q lies in the disk for t in a closed half-line whose endpoint is the
/// t at which q is cocircular with p_i, p_j; points on the chord are inside
/// for every t and points on the supporting line outside the chord never are.
/// The count is piecewise constant and its minimum is taken on an open
/// interval between consecutive event values (or beyond the extremes), so a
/// single sorted sweep over the events suffices. Half-plane limits never
/// lower the minimum and are not part of the family.
std::size_t min_enclosing_count(const PointSet& s, std::size_t i, std::size_t j);

GeometricGraph build_k_gabriel(std::shared_ptr<const PointSet> s, int k);
GeometricGraph build_k_rng(std::shared_ptr<const PointSet> s, int k);
GeometricGraph build_k_delaunay(std::shared_ptr<const PointSet> s, int k);

/// Convenience overloads that copy the point set.
GeometricGraph build_k_gabriel(const PointSet& s, int k);
GeometricGraph build_k_rng(const PointSet& s, int k);
GeometricGraph build_k_delaunay(const PointSet& s, int k);

/// True iff two closed segments meet anywhere other than a shared endpoint.
bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

/// No two edges intersect except at shared endpoints.
bool is_plane(const GeometricGraph& g);

}  // namespace proxigraph
