#include "proxigraph/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "proxigraph/errors.hpp"

namespace proxigraph {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Parses an optionally signed run of digits into an integer.
mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    int column = static_cast<int>(text.data() - whole.data()) + 1;
    throw ParseError("malformed number '" + std::string(whole) + "'", 0, column);
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    mpz_class exp = parse_integer(text.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 4096) throw ParseError("exponent out of range in '" + std::string(text) + "'");
    exponent = exp.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }

  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - fraction_digits;
  Scalar q;
  if (scale >= 0) {
    q = Scalar(num * pow10(static_cast<unsigned long>(scale)));
  } else {
    q = Scalar(num, pow10(static_cast<unsigned long>(-scale)));
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

FloatPoint to_float(const Point& p) { return {p.x.get_d(), p.y.get_d()}; }

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [this](std::size_t a, std::size_t b) {
    const Point& p = points_[a];
    const Point& q = points_[b];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      throw Error("point set contains duplicate points at indices " +
                  std::to_string(std::min(order[k - 1], order[k])) + " and " +
                  std::to_string(std::max(order[k - 1], order[k])));
    }
  }
}

const Point& PointSet::at(std::size_t i) const {
  if (i >= points_.size()) {
    throw IndexError("point index " + std::to_string(i) + " out of range for " + std::to_string(points_.size()) +
                     " points");
  }
  return points_[i];
}

Scalar sq_dist(const Point& p, const Point& q) {
  Scalar dx = p.x - q.x;
  Scalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

bool in_diameter_disk(const Point& a, const Point& b, const Point& q) {
  if (a == b) throw DegeneratePairError();
  Scalar dot = (a.x - q.x) * (b.x - q.x) + (a.y - q.y) * (b.y - q.y);
  return sgn(dot) <= 0;
}

bool in_lune(const Point& a, const Point& b, const Point& q) {
  if (a == b) throw DegeneratePairError();
  Scalar ab = sq_dist(a, b);
  return sq_dist(a, q) < ab && sq_dist(b, q) < ab;
}

Point to_edge_frame(const Point& a, const Point& b, const Point& q) {
  if (a == b) throw DegeneratePairError();
  Scalar dx = b.x - a.x;
  Scalar dy = b.y - a.y;
  Scalar mx = (a.x + b.x) / 2;
  Scalar my = (a.y + b.y) / 2;
  Scalar px = q.x - mx;
  Scalar py = q.y - my;
  Scalar len2 = dx * dx + dy * dy;
  Scalar x = 2 * (px * dx + py * dy) / len2;
  Scalar y = 2 * (dx * py - dy * px) / len2;
  return {std::move(x), std::move(y)};
}

NormalizedEdge normalize_edge(const PointSet& s, std::size_t i, std::size_t j) {
  const Point& a = s.at(i);
  const Point& b = s.at(j);
  if (i == j || a == b) throw DegeneratePairError();

  NormalizedEdge out;
  out.points.reserve(s.size());
  for (const Point& q : s) out.points.push_back(to_float(to_edge_frame(a, b, q)));

  const double dx = Scalar(b.x - a.x).get_d();
  const double dy = Scalar(b.y - a.y).get_d();
  out.frame.scale = 2.0 / std::sqrt(sq_dist(a, b).get_d());
  out.frame.rotation = std::atan2(dy, dx);
  out.frame.origin = to_float(Point((a.x + b.x) / 2, (a.y + b.y) / 2));
  return out;
}

}  // namespace proxigraph
