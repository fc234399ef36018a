#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxigraph {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-0.25" or "1.5e-3" into an
/// exact rational. Decimals never pass through binary floating point.
/// Throws ParseError (column relative to the token) on malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Scalar& value);

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Lossy double-precision point, used for rendering and packing checks only.
struct FloatPoint {
  double x = 0.0;
  double y = 0.0;
};

FloatPoint to_float(const Point& p);

/// An ordered list of pairwise distinct points. Indices are the identity of
/// the points for every derived structure.
class PointSet {
 public:
  PointSet() = default;
  /// Throws Error if two points coincide.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  /// Bounds-checked access; throws IndexError.
  const Point& at(std::size_t i) const;
  std::span<const Point> points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Point> points_;
};

Scalar sq_dist(const Point& p, const Point& q);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed disk with diameter ab contains q, i.e. (a - q).(b - q) <= 0.
/// Throws DegeneratePairError when a == b.
bool in_diameter_disk(const Point& a, const Point& b, const Point& q);

/// Open lune of ab contains q: strictly closer to both a and b than |ab|.
/// Throws DegeneratePairError when a == b.
bool in_lune(const Point& a, const Point& b, const Point& q);

/// Similarity (rotation, uniform scale, translation; never a reflection)
/// sending the chosen edge onto (-1,0) -> (1,0).
struct EdgeFrame {
  double scale = 1.0;     ///< 2 / |p_i p_j|
  double rotation = 0.0;  ///< radians; the frame rotates by -rotation
  FloatPoint origin;      ///< midpoint of the edge in input coordinates
};

struct NormalizedEdge {
  std::vector<FloatPoint> points;
  EdgeFrame frame;
};

/// Exact image of q in the frame of edge (a, b). The map only needs
/// dot/cross products divided by |ab|^2, so no square root is taken.
Point to_edge_frame(const Point& a, const Point& b, const Point& q);

/// Image of every point of s under the similarity fixing edge (i, j) at
/// (-1,0), (1,0). Throws IndexError or DegeneratePairError.
NormalizedEdge normalize_edge(const PointSet& s, std::size_t i, std::size_t j);

}  // namespace proxigraph
