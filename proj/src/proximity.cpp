#include "proxigraph/proximity.hpp"

#include <algorithm>

#include "proxigraph/errors.hpp"

namespace proxigraph {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kGabriel: return "kgg";
    case GraphKind::kRng: return "krng";
    case GraphKind::kDelaunay: return "kdg";
    case GraphKind::kCustom: return "custom";
  }
  return "custom";
}

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "kgg" || name == "gabriel") return GraphKind::kGabriel;
  if (name == "krng") return GraphKind::kRng;
  if (name == "kdg") return GraphKind::kDelaunay;
  if (name == "custom") return GraphKind::kCustom;
  throw Error("unknown graph kind '" + name + "'");
}

GeometricGraph::GeometricGraph(std::shared_ptr<const PointSet> points, GraphKind kind, int k)
    : points_(std::move(points)), kind_(kind), k_(k) {
  if (!points_) throw Error("graph requires a point set");
  if (k_ < 0) throw Error("k must be non-negative");
}

void GeometricGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= points_->size() || j >= points_->size()) {
    throw IndexError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  if (i == j) throw IndexError("self-loop at " + std::to_string(i));
  edges_.emplace(i, j);
}

bool GeometricGraph::has_edge(std::size_t i, std::size_t j) const { return edges_.contains(Edge(i, j)); }

std::vector<std::vector<std::size_t>> GeometricGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(points_->size());
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool GeometricGraph::is_subgraph_of(const GeometricGraph& other) const {
  if (points_ != other.points_ && !(*points_ == *other.points_)) return false;
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

namespace {

void check_pair(const PointSet& s, std::size_t i, std::size_t j) {
  s.at(i);
  s.at(j);
  if (i == j) throw DegeneratePairError();
}

void check_size(const PointSet& s) {
  if (s.size() < 2) throw TooFewPointsError("proximity graphs need at least 2 points");
}

template <typename Admit>
GeometricGraph build(std::shared_ptr<const PointSet> s, GraphKind kind, int k, Admit admit) {
  check_size(*s);
  GeometricGraph g(s, kind, k);
  const std::size_t n = s->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (admit(*s, i, j) <= static_cast<std::size_t>(k)) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

std::size_t gabriel_witness_count(const PointSet& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  std::size_t count = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (l != i && l != j && in_diameter_disk(s[i], s[j], s[l])) ++count;
  }
  return count;
}

std::size_t lune_count(const PointSet& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  std::size_t count = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (l != i && l != j && in_lune(s[i], s[j], s[l])) ++count;
  }
  return count;
}

std::size_t min_enclosing_count(const PointSet& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  const Point& a = s[i];
  const Point& b = s[j];
  const Scalar mx = (a.x + b.x) / 2;
  const Scalar my = (a.y + b.y) / 2;
  const Scalar px = a.y - b.y;  // perp(b - a) = (-(b.y - a.y), b.x - a.x)
  const Scalar py = b.x - a.x;
  const Scalar ma = (mx - a.x) * (mx - a.x) + (my - a.y) * (my - a.y);

  struct Event {
    Scalar t;
    bool enters;  // true: inside for t >= event, false: inside for t <= event
  };
  std::vector<Event> events;
  std::size_t base = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (l == i || l == j) continue;
    const Point& q = s[l];
    Scalar lin = 2 * (px * (a.x - q.x) + py * (a.y - q.y));
    Scalar off = (mx - q.x) * (mx - q.x) + (my - q.y) * (my - q.y) - ma;
    const int sign = sgn(lin);
    if (sign == 0) {
      if (sgn(off) <= 0) ++base;
      continue;
    }
    if (sign > 0) ++base;  // inside as t -> -infinity
    events.push_back({Scalar(-off / lin), sign < 0});
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.t < y.t; });

  std::ptrdiff_t running = static_cast<std::ptrdiff_t>(base);
  std::ptrdiff_t best = running;
  for (std::size_t k = 0; k < events.size();) {
    std::size_t end = k;
    while (end < events.size() && events[end].t == events[k].t) {
      running += events[end].enters ? 1 : -1;
      ++end;
    }
    best = std::min(best, running);
    k = end;
  }
  return static_cast<std::size_t>(best);
}

GeometricGraph build_k_gabriel(std::shared_ptr<const PointSet> s, int k) {
  return build(std::move(s), GraphKind::kGabriel, k, gabriel_witness_count);
}

GeometricGraph build_k_rng(std::shared_ptr<const PointSet> s, int k) {
  return build(std::move(s), GraphKind::kRng, k, lune_count);
}

GeometricGraph build_k_delaunay(std::shared_ptr<const PointSet> s, int k) {
  return build(std::move(s), GraphKind::kDelaunay, k, min_enclosing_count);
}

GeometricGraph build_k_gabriel(const PointSet& s, int k) {
  return build_k_gabriel(std::make_shared<const PointSet>(s), k);
}
GeometricGraph build_k_rng(const PointSet& s, int k) { return build_k_rng(std::make_shared<const PointSet>(s), k); }
GeometricGraph build_k_delaunay(const PointSet& s, int k) {
  return build_k_delaunay(std::make_shared<const PointSet>(s), k);
}

namespace {

// q lies on the closed segment pr, given that p, q, r are collinear.
bool on_segment(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) && std::min(p.y, r.y) <= q.y &&
         q.y <= std::max(p.y, r.y);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int d1 = orientation(q1, q2, p1);
  const int d2 = orientation(q1, q2, p2);
  const int d3 = orientation(p1, p2, q1);
  const int d4 = orientation(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, p1, q2)) return true;
  if (d2 == 0 && on_segment(q1, p2, q2)) return true;
  if (d3 == 0 && on_segment(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment(p1, q2, p2)) return true;
  return false;
}

}  // namespace

bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const Point* shared = nullptr;
  const Point* p_other = nullptr;
  const Point* q_other = nullptr;
  if (p1 == q1) {
    shared = &p1, p_other = &p2, q_other = &q2;
  } else if (p1 == q2) {
    shared = &p1, p_other = &p2, q_other = &q1;
  } else if (p2 == q1) {
    shared = &p2, p_other = &p1, q_other = &q2;
  } else if (p2 == q2) {
    shared = &p2, p_other = &p1, q_other = &q1;
  }
  if (shared == nullptr) return segments_intersect(p1, p2, q1, q2);
  if (*p_other == *q_other) return false;  // same segment
  // Sharing an endpoint, they meet elsewhere only when they overlap along a line.
  if (orientation(*shared, *p_other, *q_other) != 0) return false;
  Scalar dot = (p_other->x - shared->x) * (q_other->x - shared->x) + (p_other->y - shared->y) * (q_other->y - shared->y);
  return sgn(dot) > 0;
}

bool is_plane(const GeometricGraph& g) {
  const PointSet& s = g.points();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (segments_cross(s[edges[e].a], s[edges[e].b], s[edges[f].a], s[edges[f].b])) return false;
    }
  }
  return true;
}

}  // namespace proxigraph
