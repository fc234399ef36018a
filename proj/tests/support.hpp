#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "proxigraph/geometry.hpp"

namespace support {

// Distinct points on a small integer grid: dense with collinear and
// cocircular ties, which the exact predicates must handle.
inline proxigraph::PointSet grid_points(std::size_t n, long side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, side);
  std::set<std::pair<long, long>> seen;
  std::vector<proxigraph::Point> pts;
  while (pts.size() < n) {
    const long x = coord(rng), y = coord(rng);
    if (seen.emplace(x, y).second) pts.emplace_back(x, y);
  }
  return proxigraph::PointSet(std::move(pts));
}

inline proxigraph::PointSet make(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<proxigraph::Point> pts;
  for (const auto& [x, y] : xy) pts.emplace_back(x, y);
  return proxigraph::PointSet(std::move(pts));
}

inline proxigraph::PointSet unit_square() { return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline proxigraph::PointSet collinear_triple() { return make({{-1, 0}, {1, 0}, {0, 0}}); }

}  // namespace support
