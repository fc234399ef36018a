#include "proxigraph/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "proxigraph/errors.hpp"

namespace proxigraph {

namespace {

using Role = PointRef::Role;

PointRef X() { return {Role::kX, 0}; }
PointRef Y() { return {Role::kY, 0}; }
PointRef U(std::size_t i) { return {Role::kU, i}; }
PointRef S(std::size_t i) { return {Role::kS, i}; }
PointRef T(std::size_t i) { return {Role::kT, i}; }

Term distance(PointRef a, PointRef b, PointRef c, PointRef d) { return {Term::Kind::kDistance, a, b, c, d}; }
Term frame(PointRef a, PointRef b) { return {Term::Kind::kFrame, a, b, {}, {}}; }

// d(a, b) >= max{d(c_k, d_k)..., 2}
Constraint at_least(Family f, std::size_t i, std::size_t j, PointRef a, PointRef b,
                    std::initializer_list<std::pair<PointRef, PointRef>> rhs) {
  Constraint c{f, i, j, {}};
  for (const auto& [p, q] : rhs) c.terms.push_back(distance(a, b, p, q));
  c.terms.push_back(frame(a, b));
  return c;
}

// Offset of a point's x coordinate in the variable vector, or -1 when fixed.
long offset(const PointRef& p) {
  switch (p.role) {
    case Role::kU: return static_cast<long>(6 * p.index);
    case Role::kS: return static_cast<long>(6 * p.index + 2);
    case Role::kT: return static_cast<long>(6 * p.index + 4);
    default: return -1;
  }
}

struct Vec2 {
  double x, y;
};

Vec2 coords(const PointRef& p, const std::vector<double>& v) {
  if (p.role == Role::kX) return {-1.0, 0.0};
  if (p.role == Role::kY) return {1.0, 0.0};
  const auto o = static_cast<std::size_t>(offset(p));
  return {v[o], v[o + 1]};
}

double sq(Vec2 a, Vec2 b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

double evaluate(const Term& t, const std::vector<double>& v) {
  switch (t.kind) {
    case Term::Kind::kDistance: return sq(coords(t.a, v), coords(t.b, v)) - sq(coords(t.c, v), coords(t.d, v));
    case Term::Kind::kFrame: return sq(coords(t.a, v), coords(t.b, v)) - 4.0;
    case Term::Kind::kUnitDisk: {
      const Vec2 a = coords(t.a, v);
      return 1.0 - (a.x * a.x + a.y * a.y);
    }
  }
  return 0.0;
}

// Adds weight * d/dv |a - b|^2 into grad.
void add_sq_gradient(const PointRef& a, const PointRef& b, double weight, const std::vector<double>& v,
                     std::vector<double>& grad) {
  const Vec2 pa = coords(a, v), pb = coords(b, v);
  const double gx = 2.0 * (pa.x - pb.x) * weight, gy = 2.0 * (pa.y - pb.y) * weight;
  if (long o = offset(a); o >= 0) {
    grad[static_cast<std::size_t>(o)] += gx;
    grad[static_cast<std::size_t>(o) + 1] += gy;
  }
  if (long o = offset(b); o >= 0) {
    grad[static_cast<std::size_t>(o)] -= gx;
    grad[static_cast<std::size_t>(o) + 1] -= gy;
  }
}

class Penalty {
 public:
  Penalty(const FeasibilitySystem& sys, double margin) : margin_(margin) {
    for (const Constraint& c : sys.constraints())
      for (const Term& t : c.terms) terms_.push_back(t);
  }

  // Sum of squared margin violations; fills grad when non-null.
  double operator()(const std::vector<double>& v, std::vector<double>* grad) const {
    if (grad) std::fill(grad->begin(), grad->end(), 0.0);
    double total = 0.0;
    for (const Term& t : terms_) {
      const double h = margin_ - evaluate(t, v);
      if (h <= 0) continue;
      total += h * h;
      if (!grad) continue;
      // d(h^2) = -2h dg
      const double w = -2.0 * h;
      switch (t.kind) {
        case Term::Kind::kDistance:
          add_sq_gradient(t.a, t.b, w, v, *grad);
          add_sq_gradient(t.c, t.d, -w, v, *grad);
          break;
        case Term::Kind::kFrame: add_sq_gradient(t.a, t.b, w, v, *grad); break;
        case Term::Kind::kUnitDisk: {
          // g = 1 - |a|^2, so d(h^2)/da = 4h a.
          const auto o = static_cast<std::size_t>(offset(t.a));
          (*grad)[o] += 4.0 * h * v[o];
          (*grad)[o + 1] += 4.0 * h * v[o + 1];
          break;
        }
      }
    }
    return total;
  }

 private:
  double margin_;
  std::vector<Term> terms_;
};

// Gradient descent with a step that grows on success and halves on failure.
std::vector<double> descend(const Penalty& f, std::vector<double> v, std::size_t max_iterations) {
  std::vector<double> grad(v.size()), trial(v.size());
  double value = f(v, &grad);
  double step = 0.05;
  for (std::size_t it = 0; it < max_iterations && value > 0.0 && step > 1e-16; ++it) {
    for (std::size_t k = 0; k < v.size(); ++k) trial[k] = v[k] - step * grad[k];
    const double next = f(trial, nullptr);
    if (next < value) {
      v.swap(trial);
      value = f(v, &grad);
      step *= 1.2;
    } else {
      step *= 0.5;
    }
  }
  return v;
}

Assignment random_start(std::size_t kappa, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> inner(0.0, 1.0);
  std::uniform_real_distribution<double> outer(1.5, 3.5);
  Assignment a;
  a.values.resize(6 * kappa);
  for (std::size_t i = 0; i < kappa; ++i) {
    const double ru = std::sqrt(inner(rng)), au = angle(rng);
    const double rs = outer(rng), as = angle(rng);
    const double rt = outer(rng), at = angle(rng);
    a.values[6 * i + 0] = ru * std::cos(au);
    a.values[6 * i + 1] = ru * std::sin(au);
    a.values[6 * i + 2] = rs * std::cos(as);
    a.values[6 * i + 3] = rs * std::sin(as);
    a.values[6 * i + 4] = rt * std::cos(at);
    a.values[6 * i + 5] = rt * std::sin(at);
  }
  return a;
}

}  // namespace

FeasibilitySystem::FeasibilitySystem(std::size_t kappa) : kappa_(kappa) {
  if (kappa == 0) throw Error("kappa must be positive");
  const std::size_t k = kappa;
  for (std::size_t i = 0; i < k; ++i) constraints_.push_back(at_least(Family::kSx, i, i, S(i), X(), {{S(i), U(i)}}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      constraints_.push_back(at_least(Family::kSs, i, j, S(i), S(j), {{S(i), U(i)}, {S(j), U(j)}}));
  for (std::size_t i = 0; i < k; ++i) constraints_.push_back(at_least(Family::kTy, i, i, T(i), Y(), {{T(i), U(i)}}));
  for (std::size_t i = 0; i < k; ++i)
    constraints_.push_back(at_least(Family::kSt, i, i, S(i), T(i), {{S(i), U(i)}, {T(i), U(i)}}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      constraints_.push_back(at_least(Family::kTt, i, j, T(i), T(j), {{T(i), U(i)}, {T(j), U(j)}}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      constraints_.push_back(at_least(Family::kStCross, i, j, S(i), T(j), {{S(i), U(i)}, {T(j), U(j)}}));
  for (std::size_t i = 0; i < k; ++i) {
    constraints_.push_back({Family::kUDisk, i, i, {Term{Term::Kind::kUnitDisk, U(i), {}, {}, {}}}});
  }
}

std::size_t FeasibilitySystem::term_count() const {
  std::size_t n = 0;
  for (const Constraint& c : constraints_) n += c.terms.size();
  return n;
}

std::size_t FeasibilitySystem::expected_constraint_count(std::size_t kappa) {
  return 4 * kappa + 3 * (kappa * (kappa - 1) / 2);
}

std::vector<Residual> residuals(const FeasibilitySystem& sys, const Assignment& a) {
  if (a.values.size() != sys.dimension()) {
    throw DimensionMismatchError("assignment has " + std::to_string(a.values.size()) + " values, expected " +
                                 std::to_string(sys.dimension()));
  }
  std::vector<Residual> out;
  out.reserve(sys.term_count());
  const auto& cs = sys.constraints();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    for (std::size_t t = 0; t < cs[c].terms.size(); ++t) {
      out.push_back({c, t, std::max(0.0, -evaluate(cs[c].terms[t], a.values))});
    }
  }
  return out;
}

double max_residual(const FeasibilitySystem& sys, const Assignment& a) {
  double worst = 0.0;
  for (const Residual& r : residuals(sys, a)) worst = std::max(worst, r.violation);
  return worst;
}

Assignment assignment_from_traversal(const PointSet& s, const TraversalRecord& r) {
  const Point& x = s[r.x];
  const Point& y = s[r.y];
  Assignment a;
  a.values.reserve(6 * r.kappa());
  for (std::size_t i = 0; i < r.kappa(); ++i) {
    for (std::size_t p : {r.u[i], r.s[i], r.t[i]}) {
      const FloatPoint f = to_float(to_edge_frame(x, y, s[p]));
      a.values.push_back(f.x);
      a.values.push_back(f.y);
    }
  }
  return a;
}

Assignment structured_start(std::size_t kappa) {
  // Chain y -> u_1 -> s_2 -> u_2 -> ... -> u_kappa -> x: the outer points
  // s_i, t_i = s_{i+1} sit on a ring of radius 2.2, fanned evenly around the
  // circle starting next to x, and each u_i sits inside the unit disk in the
  // direction halfway between its two outer neighbours.
  constexpr double kRing = 2.2;
  constexpr double kInner = 0.9;
  const double pi = std::numbers::pi;
  auto ring_angle = [&](std::size_t k) { return pi + 2.0 * pi * static_cast<double>(k) / static_cast<double>(kappa + 2); };
  Assignment a;
  a.values.resize(6 * kappa);
  for (std::size_t i = 0; i < kappa; ++i) {
    const double as = ring_angle(i + 1), at = ring_angle(i + 2);
    const double au = 0.5 * (as + at);
    a.values[6 * i + 0] = kInner * std::cos(au);
    a.values[6 * i + 1] = kInner * std::sin(au);
    a.values[6 * i + 2] = kRing * std::cos(as);
    a.values[6 * i + 3] = kRing * std::sin(as);
    a.values[6 * i + 4] = kRing * std::cos(at);
    a.values[6 * i + 5] = kRing * std::sin(at);
  }
  return a;
}

FeasibilityResult search_feasible(std::size_t kappa, const FeasibilityOptions& options) {
  const FeasibilitySystem sys(kappa);
  const Penalty penalty(sys, options.margin);
  std::mt19937_64 rng(options.seed);

  FeasibilityResult best;
  best.best = structured_start(kappa);
  best.best.values = descend(penalty, best.best.values, options.max_iterations);
  best.max_residual = max_residual(sys, best.best);
  best.start = -1;

  for (std::size_t r = 0; r < options.restarts && best.max_residual > 0.0; ++r) {
    Assignment a = random_start(kappa, rng);
    a.values = descend(penalty, a.values, options.max_iterations);
    const double worst = max_residual(sys, a);
    if (worst < best.max_residual) {
      best.best = std::move(a);
      best.max_residual = worst;
      best.start = static_cast<long>(r);
    }
  }
  return best;
}

}  // namespace proxigraph
