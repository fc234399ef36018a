#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "proxigraph/errors.hpp"
#include "proxigraph/generators.hpp"
#include "proxigraph/geometry.hpp"
#include "support.hpp"

using namespace proxigraph;

namespace {

Point P(const char* x, const char* y) { return Point(parse_scalar(x), parse_scalar(y)); }

}  // namespace

TEST_CASE("parse_scalar converts decimals exactly") {
  CHECK(parse_scalar("0.25") == Scalar(1, 4));
  CHECK(parse_scalar("3/7") == Scalar(3, 7));
  CHECK(parse_scalar("-6/8") == Scalar(-3, 4));
  CHECK(parse_scalar("-1.5e-3") == Scalar(-3, 2000));
  CHECK(parse_scalar("2E2") == Scalar(200));
  CHECK(parse_scalar("+.5") == Scalar(1, 2));
  CHECK(parse_scalar("0.1") == Scalar(1, 10));
  CHECK(parse_scalar("0.1") != Scalar(0.1));  // the binary double is not 1/10
  CHECK(parse_scalar("123456789012345678901234567890") ==
        Scalar(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parse_scalar rejects malformed numbers") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", ".", "1e", "1e99999", "--1", "1/-2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
  }
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(parse_scalar("0.50")) == "1/2");
  CHECK(to_string(parse_scalar("-4/2")) == "-2");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int t = 0; t < 200; ++t) {
    Scalar q(num(rng), den(rng));
    q.canonicalize();
    CHECK(parse_scalar(to_string(q)) == q);
  }
}

TEST_CASE("sq_dist examples") {
  CHECK(sq_dist(Point(-1, 0), Point(1, 0)) == 4);
  CHECK(sq_dist(Point(3, 5), Point(3, 5)) == 0);
  CHECK(sq_dist(Point(0, 0), Point(3, 4)) == 25);
}

TEST_CASE("in_diameter_disk examples") {
  const Point a(-1, 0), b(1, 0);
  CHECK(in_diameter_disk(a, b, Point(0, 0)));
  CHECK(in_diameter_disk(a, b, Point(0, 1)));  // boundary, closed disk
  CHECK_FALSE(in_diameter_disk(a, b, Point(2, 0)));
  CHECK(in_diameter_disk(a, b, a));
  CHECK_THROWS_AS(in_diameter_disk(a, a, Point(0, 0)), DegeneratePairError);
}

TEST_CASE("in_lune examples") {
  const Point a(-1, 0), b(1, 0);
  CHECK(in_lune(a, b, Point(0, 0)));
  CHECK_FALSE(in_lune(a, b, b));
  // 1 + 2.89 = 3.89 < 4 on both sides, so (0, 1.7) is inside.
  CHECK(sq_dist(a, P("0", "1.7")) == parse_scalar("3.89"));
  CHECK(in_lune(a, b, P("0", "1.7")));
  CHECK_FALSE(in_lune(a, b, Point(0, 2)));
  CHECK(in_lune(a, b, P("0", "1.732")));
  CHECK_FALSE(in_lune(a, b, P("0", "1.7321")));
  CHECK_THROWS_AS(in_lune(b, b, Point(0, 0)), DegeneratePairError);
}

TEST_CASE("PointSet rejects duplicates and checks indices") {
  CHECK_THROWS_AS(PointSet({Point(0, 0), Point(1, 1), P("0.0", "0/5")}), Error);
  const PointSet s({Point(0, 0), Point(1, 1)});
  CHECK(s.size() == 2);
  CHECK(s.at(1) == Point(1, 1));
  CHECK_THROWS_AS(s.at(2), IndexError);
}

TEST_CASE("orientation signs") {
  CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == 1);
  CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, -1)) == -1);
  CHECK(orientation(Point(0, 0), Point(1, 1), Point(3, 3)) == 0);
}

TEST_CASE("normalize_edge examples") {
  auto near = [](FloatPoint p, double x, double y) { return std::abs(p.x - x) < 1e-12 && std::abs(p.y - y) < 1e-12; };
  {
    const PointSet s({Point(0, 0), Point(2, 0)});
    const NormalizedEdge n = normalize_edge(s, 0, 1);
    CHECK(near(n.points[0], -1, 0));
    CHECK(near(n.points[1], 1, 0));
    CHECK(n.frame.scale == doctest::Approx(1.0));
  }
  {
    const PointSet s({Point(0, 0), Point(0, 2)});
    const NormalizedEdge n = normalize_edge(s, 0, 1);
    CHECK(near(n.points[0], -1, 0));
    CHECK(near(n.points[1], 1, 0));
    CHECK(n.frame.rotation == doctest::Approx(M_PI / 2));
  }
  {
    const PointSet s({Point(0, 0), Point(4, 0), Point(2, 1)});
    const NormalizedEdge n = normalize_edge(s, 0, 1);
    CHECK(near(n.points[2], 0, 0.5));
    CHECK(n.frame.scale == doctest::Approx(0.5));
    CHECK(to_edge_frame(s[0], s[1], s[2]) == Point(Scalar(0), Scalar(1, 2)));
  }
  const PointSet s({Point(0, 0), Point(1, 0)});
  CHECK_THROWS_AS(normalize_edge(s, 0, 2), IndexError);
  CHECK_THROWS_AS(normalize_edge(s, 1, 1), DegeneratePairError);
}

TEST_CASE("normalization is a similarity without reflection") {
  const PointSet s = random_point_set(30, Generator::kUniform, 11);
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t j = i + 7;
    const NormalizedEdge n = normalize_edge(s, i, j);
    CHECK(n.points[i].x == doctest::Approx(-1.0));
    CHECK(n.points[j].x == doctest::Approx(1.0));
    for (std::size_t q = 0; q < s.size(); ++q) {
      const Point exact = to_edge_frame(s[i], s[j], s[q]);
      CHECK(n.points[q].x == doctest::Approx(exact.x.get_d()).epsilon(1e-9));
      CHECK(n.points[q].y == doctest::Approx(exact.y.get_d()).epsilon(1e-9));
      // Orientation is preserved.
      CHECK(orientation(s[i], s[j], s[q]) == sgn(exact.y));
      // Distances scale by 2/|p_i p_j|.
      const Scalar ratio = sq_dist(to_edge_frame(s[i], s[j], s[0]), exact) * sq_dist(s[i], s[j]);
      CHECK(ratio == 4 * sq_dist(s[0], s[q]));
    }
  }
}

TEST_CASE("property: Thales consistency with the float test") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-1000, 1000);
  int decided = 0;
  for (int t = 0; t < 3000; ++t) {
    const Point a(c(rng), c(rng)), b(c(rng), c(rng)), q(c(rng), c(rng));
    if (a == b) continue;
    const double mx = (a.x.get_d() + b.x.get_d()) / 2, my = (a.y.get_d() + b.y.get_d()) / 2;
    const double r2 = sq_dist(a, b).get_d() / 4;
    const double slack = r2 - ((q.x.get_d() - mx) * (q.x.get_d() - mx) + (q.y.get_d() - my) * (q.y.get_d() - my));
    if (std::abs(slack) <= 1e-6 * r2) continue;
    ++decided;
    CHECK(in_diameter_disk(a, b, q) == (slack > 0));
  }
  CHECK(decided > 2500);
}

TEST_CASE("property: closed diameter disk lies in the open lune") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet s = support::grid_points(12, 6, seed);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t q = 0; q < s.size(); ++q) {
          if (i == j || q == i || q == j) continue;
          if (in_diameter_disk(s[i], s[j], s[q])) CHECK(in_lune(s[i], s[j], s[q]));
        }
  }
}

TEST_CASE("property: predicates are invariant under rational similarity") {
  const Scalar scale(7, 3);
  const Scalar dx(-5, 11), dy(13, 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet s = support::grid_points(10, 5, seed);
    std::vector<Point> moved;
    for (const Point& p : s) moved.emplace_back(p.x * scale + dx, p.y * scale + dy);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t q = 0; q < s.size(); ++q) {
          if (i == j) continue;
          CHECK(in_diameter_disk(s[i], s[j], s[q]) == in_diameter_disk(moved[i], moved[j], moved[q]));
          CHECK(in_lune(s[i], s[j], s[q]) == in_lune(moved[i], moved[j], moved[q]));
        }
  }
}

TEST_CASE("property: sq_dist symmetric and positive") {
  const PointSet s = random_point_set(25, Generator::kGaussian, 5);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(sq_dist(s[i], s[j]) == sq_dist(s[j], s[i]));
      CHECK((sq_dist(s[i], s[j]) == 0) == (i == j));
      CHECK(sq_dist(s[i], s[j]) == oracle::d2(s[i], s[j]));
    }
}
