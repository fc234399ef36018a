#include "proxigraph/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "proxigraph/errors.hpp"
#include "proxigraph/proximity.hpp"

namespace proxigraph {

std::string to_string(Family family) {
  switch (family) {
    case Family::kSx: return "sx";
    case Family::kSs: return "ss";
    case Family::kTy: return "ty";
    case Family::kSt: return "st";
    case Family::kTt: return "tt";
    case Family::kStCross: return "st-cross";
    case Family::kUDisk: return "u-disk";
  }
  return "?";
}

std::string to_string(SearchMode mode) { return mode == SearchMode::kExact ? "exact" : "local"; }

SearchMode parse_search_mode(const std::string& name) {
  if (name == "exact") return SearchMode::kExact;
  if (name == "local") return SearchMode::kLocal;
  throw Error("unknown mode '" + name + "' (expected exact or local)");
}

bool InequalityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

bool InequalityReport::family_holds(Family family) const {
  return std::all_of(checks.begin(), checks.end(),
                     [family](const InequalityCheck& c) { return c.family != family || c.holds; });
}

std::vector<InequalityCheck> InequalityReport::violations() const {
  std::vector<InequalityCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const InequalityCheck& c) { return !c.holds; });
  return out;
}

std::size_t kappa(const PointSet& s, std::size_t i, std::size_t j) { return gabriel_witness_count(s, i, j); }

namespace {

using IndexPair = std::pair<std::size_t, std::size_t>;

class InequalityBuilder {
 public:
  InequalityBuilder(const PointSet& s, std::size_t x, std::size_t y) : s_(s), xy_(sq_dist(s[x], s[y])) {}

  // d(a, b) >= max{d(c, d) for each rhs pair, |xy|}
  InequalityCheck compare(Family family, std::size_t i, std::size_t j, IndexPair lhs,
                          std::initializer_list<IndexPair> rhs) const {
    InequalityCheck check;
    check.family = family;
    check.i = i;
    check.j = j;
    check.lhs_a = lhs.first;
    check.lhs_b = lhs.second;
    Scalar left = sq_dist(s_[lhs.first], s_[lhs.second]);
    Scalar right = xy_;
    for (const IndexPair& p : rhs) {
      Scalar d = sq_dist(s_[p.first], s_[p.second]);
      if (d > right) right = d;
    }
    check.holds = left >= right;
    check.slack = left - right;
    return check;
  }

 private:
  const PointSet& s_;
  Scalar xy_;
};

}  // namespace

InequalityReport check_inequalities(const PointSet& s, const HamCycle& c, std::size_t i, std::size_t j) {
  InequalityReport report;
  report.traversal = extract_traversal(c, s, i, j);
  const TraversalRecord& r = report.traversal;
  const std::size_t x = r.x, y = r.y, k = r.kappa();
  const InequalityBuilder b(s, x, y);
  auto& out = report.checks;

  for (std::size_t a = 0; a < k; ++a) {
    out.push_back(b.compare(Family::kSx, a, a, {r.s[a], x}, {{r.s[a], r.u[a]}}));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t q = a + 1; q < k; ++q)
      out.push_back(b.compare(Family::kSs, a, q, {r.s[a], r.s[q]}, {{r.s[a], r.u[a]}, {r.s[q], r.u[q]}}));
  for (std::size_t a = 0; a < k; ++a) {
    out.push_back(b.compare(Family::kTy, a, a, {r.t[a], y}, {{r.t[a], r.u[a]}}));
  }
  for (std::size_t a = 0; a < k; ++a) {
    out.push_back(b.compare(Family::kSt, a, a, {r.s[a], r.t[a]}, {{r.s[a], r.u[a]}, {r.t[a], r.u[a]}}));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t q = a + 1; q < k; ++q)
      out.push_back(b.compare(Family::kTt, a, q, {r.t[a], r.t[q]}, {{r.t[a], r.u[a]}, {r.t[q], r.u[q]}}));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t q = a + 1; q < k; ++q)
      out.push_back(b.compare(Family::kStCross, a, q, {r.s[a], r.t[q]}, {{r.s[a], r.u[a]}, {r.t[q], r.u[q]}}));

  const Point& px = s[x];
  const Point& py = s[y];
  for (std::size_t a = 0; a < k; ++a) {
    const Point& u = s[r.u[a]];
    InequalityCheck check;
    check.family = Family::kUDisk;
    check.i = check.j = a;
    check.lhs_a = check.lhs_b = r.u[a];
    check.slack = -((px.x - u.x) * (py.x - u.x) + (px.y - u.y) * (py.y - u.y));
    check.holds = sgn(check.slack) >= 0;
    out.push_back(std::move(check));
  }
  return report;
}

PackingWitness build_packing_witness(const PointSet& s, const HamCycle& c, std::size_t i, std::size_t j) {
  const TraversalRecord r = extract_traversal(c, s, i, j);
  const Point& x = s[r.x];
  const Point& y = s[r.y];

  PackingWitness w;
  w.frame.reserve(s.size());
  for (const Point& p : s) w.frame.push_back(to_float(to_edge_frame(x, y, p)));
  w.centers.push_back({-1.0, 0.0});
  w.projected.push_back(false);
  const Scalar nine(9);
  for (std::size_t p : r.s) {
    const Point q = to_edge_frame(x, y, s[p]);
    const Scalar norm2 = q.x * q.x + q.y * q.y;
    if (norm2 <= nine) {
      w.centers.push_back(to_float(q));
      w.projected.push_back(false);
    } else {
      const FloatPoint f = to_float(q);
      const double scale = 3.0 / std::hypot(f.x, f.y);
      w.centers.push_back({f.x * scale, f.y * scale});
      w.projected.push_back(true);
    }
  }
  return w;
}

bool verify_packing(const PackingWitness& w, double tol) {
  if (!(tol > 0)) throw Error("packing tolerance must be positive");
  if (w.centers.size() > kMaxPackedDisks) return false;
  for (const FloatPoint& c : w.centers) {
    if (std::hypot(c.x, c.y) > 3.0 + tol) return false;
  }
  for (std::size_t a = 0; a < w.centers.size(); ++a) {
    for (std::size_t b = a + 1; b < w.centers.size(); ++b) {
      const double d = std::hypot(w.centers[a].x - w.centers[b].x, w.centers[a].y - w.centers[b].y);
      if (d < 2.0 - tol) return false;
    }
  }
  return true;
}

bool TheoremAudit::pass() const {
  return !edges.empty() && std::all_of(edges.begin(), edges.end(), [](const EdgeAudit& e) { return e.pass(); });
}

TheoremAudit audit_cycle(const PointSet& s, const HamCycle& c, std::size_t k, double tol) {
  if (c.size() != s.size()) throw IndexError("cycle does not span the point set");
  constexpr double kBoundaryBand = 1e-9;

  TheoremAudit audit;
  audit.k = k;
  audit.tol = tol;
  audit.cycle = c;
  const auto& order = c.order();
  for (std::size_t p = 0; p < order.size(); ++p) {
    const std::size_t x = order[p];
    const std::size_t y = order[(p + 1) % order.size()];
    EdgeAudit e;
    e.edge = Edge(x, y);
    e.x = x;
    e.y = y;
    e.report = check_inequalities(s, c, x, y);
    e.witness = build_packing_witness(s, c, x, y);
    e.kappa_ok = e.report.kappa() <= k;
    e.inequalities_ok = e.report.all_hold();
    e.packing_ok = verify_packing(e.witness, tol);

    std::size_t inside = 0;
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (q == x || q == y) continue;
      const double r2 = e.witness.frame[q].x * e.witness.frame[q].x + e.witness.frame[q].y * e.witness.frame[q].y;
      if (std::abs(std::sqrt(r2) - 1.0) <= kBoundaryBand) {
        ++e.boundary_points;
      } else if (r2 < 1.0) {
        ++inside;
      }
    }
    const std::size_t exact_kappa = e.report.kappa();
    e.normalization_consistent = inside <= exact_kappa && exact_kappa <= inside + e.boundary_points;

    audit.max_kappa = std::max(audit.max_kappa, exact_kappa);
    audit.edges.push_back(std::move(e));
  }
  return audit;
}

TheoremAudit verify_theorem(const PointSet& s, SearchMode mode, std::uint64_t seed, std::size_t k, double tol) {
  const HamCycle cycle = mode == SearchMode::kExact ? brute_force_minimal(s) : local_search_minimal(s, seed);
  TheoremAudit audit = audit_cycle(s, cycle, k, tol);
  audit.mode = mode;
  audit.seed = seed;
  return audit;
}

}  // namespace proxigraph
