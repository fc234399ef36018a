#include "proxigraph/generators.hpp"

#include <array>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "proxigraph/errors.hpp"

namespace proxigraph {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::kUniform: return "uniform";
    case Generator::kGaussian: return "gaussian";
    case Generator::kClustered: return "clustered";
  }
  return "uniform";
}

Generator parse_generator(const std::string& name) {
  if (name == "uniform") return Generator::kUniform;
  if (name == "gaussian") return Generator::kGaussian;
  if (name == "clustered") return Generator::kClustered;
  throw Error("unknown generator '" + name + "' (expected uniform, gaussian or clustered)");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PointSet random_point_set(std::size_t n, Generator g, std::uint64_t seed) {
  constexpr long kGrid = 1L << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> cell(0, kGrid);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::array<std::pair<double, double>, 3> centers{};
  for (auto& c : centers) c = {unit(rng), unit(rng)};
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 2);

  auto snap = [](double v) { return static_cast<long>(std::llround(v * static_cast<double>(kGrid))); };

  std::set<std::pair<long, long>> seen;
  std::vector<Point> points;
  points.reserve(n);
  while (points.size() < n) {
    long gx = 0, gy = 0;
    switch (g) {
      case Generator::kUniform:
        gx = cell(rng);
        gy = cell(rng);
        break;
      case Generator::kGaussian:
        gx = snap(0.5 + 0.15 * gauss(rng));
        gy = snap(0.5 + 0.15 * gauss(rng));
        break;
      case Generator::kClustered: {
        const auto& c = centers[static_cast<std::size_t>(pick(rng))];
        gx = snap(c.first + 0.1 * gauss(rng));
        gy = snap(c.second + 0.1 * gauss(rng));
        break;
      }
    }
    if (!seen.emplace(gx, gy).second) continue;
    Scalar x(gx, kGrid), y(gy, kGrid);
    x.canonicalize();
    y.canonicalize();
    points.emplace_back(std::move(x), std::move(y));
  }
  return PointSet(std::move(points));
}

}  // namespace proxigraph
