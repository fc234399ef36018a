#include "proxigraph/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "proxigraph/errors.hpp"

namespace proxigraph {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 0.05;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Viewport {
  double min_x = 0, max_y = 0, scale = 1, width = kCanvas, height = kCanvas;

  double x(double v) const { return (v - min_x) * scale; }
  double y(double v) const { return (max_y - v) * scale; }
};

void check(const PointSet& s, std::size_t i) {
  if (i >= s.size()) throw IndexError("vertex " + std::to_string(i) + " out of range for " + std::to_string(s.size()) + " points");
}

}  // namespace

std::string render_svg(const RenderInput& input) {
  if (input.points == nullptr) throw Error("render needs a point set");
  const PointSet& s = *input.points;
  std::vector<FloatPoint> f;
  f.reserve(s.size());
  for (const Point& p : s) f.push_back(to_float(p));
  for (const Edge& e : input.graph_edges) {
    check(s, e.a);
    check(s, e.b);
  }
  for (const Edge& e : input.circles) {
    check(s, e.a);
    check(s, e.b);
  }
  if (input.cycle && input.cycle->size() != s.size()) throw IndexError("cycle does not span the point set");

  struct Disk {
    double cx, cy, r;
  };
  std::vector<Disk> disks;
  for (const Edge& e : input.circles) {
    const FloatPoint a = f[e.a], b = f[e.b];
    disks.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2, std::hypot(a.x - b.x, a.y - b.y) / 2});
  }

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  auto extend = [&](double x0, double y0, double x1, double y1) {
    if (first) {
      lo_x = x0, hi_x = x1, lo_y = y0, hi_y = y1;
      first = false;
      return;
    }
    lo_x = std::min(lo_x, x0), hi_x = std::max(hi_x, x1);
    lo_y = std::min(lo_y, y0), hi_y = std::max(hi_y, y1);
  };
  for (const FloatPoint& p : f) extend(p.x, p.y, p.x, p.y);
  for (const Disk& d : disks) extend(d.cx - d.r, d.cy - d.r, d.cx + d.r, d.cy + d.r);
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = kMargin * span;

  Viewport vp;
  vp.min_x = lo_x - pad;
  vp.max_y = hi_y + pad;
  vp.scale = kCanvas / (span + 2 * pad);
  vp.width = (hi_x - lo_x + 2 * pad) * vp.scale;
  vp.height = (hi_y - lo_y + 2 * pad) * vp.scale;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(vp.width) + "\" height=\"" +
         num(vp.height) + "\" viewBox=\"0 0 " + num(vp.width) + ' ' + num(vp.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<g class=\"disks\" fill=\"none\" stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"6,4\">\n";
  for (const Disk& d : disks) {
    out += "<circle class=\"disk\" cx=\"" + num(vp.x(d.cx)) + "\" cy=\"" + num(vp.y(d.cy)) + "\" r=\"" +
           num(d.r * vp.scale) + "\"/>\n";
  }
  out += "</g>\n";

  auto segment = [&](const char* cls, std::size_t a, std::size_t b) {
    return std::string("<line class=\"") + cls + "\" x1=\"" + num(vp.x(f[a].x)) + "\" y1=\"" + num(vp.y(f[a].y)) +
           "\" x2=\"" + num(vp.x(f[b].x)) + "\" y2=\"" + num(vp.y(f[b].y)) + "\"/>\n";
  };
  out += "<g class=\"graph\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  for (const Edge& e : input.graph_edges) out += segment("edge", e.a, e.b);
  out += "</g>\n";

  out += "<g class=\"cycle\" stroke=\"#d62728\" stroke-width=\"3\">\n";
  if (input.cycle) {
    for (const Edge& e : input.cycle->edges()) out += segment("cycle-edge", e.a, e.b);
  }
  out += "</g>\n";

  out += "<g class=\"points\" fill=\"#000000\">\n";
  for (const FloatPoint& p : f) {
    out += "<circle class=\"point\" cx=\"" + num(vp.x(p.x)) + "\" cy=\"" + num(vp.y(p.y)) + "\" r=\"4\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) {
      throw ParseError(std::string("expected '") + c + "' in edge list", 1, static_cast<int>(i) + 1);
    }
    ++i;
  };
  auto index = [&] {
    skip();
    const std::size_t from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (from == i) throw ParseError("expected a vertex index in edge list", 1, static_cast<int>(i) + 1);
    return static_cast<std::size_t>(std::stoull(text.substr(from, i - from)));
  };
  skip();
  while (i < text.size()) {
    expect('(');
    const std::size_t a = index();
    expect(',');
    const std::size_t b = index();
    expect(')');
    if (a == b) throw ParseError("edge with equal endpoints in edge list", 1, static_cast<int>(i));
    edges.emplace_back(a, b);
    skip();
    if (i < text.size()) expect(',');
    skip();
  }
  return edges;
}

}  // namespace proxigraph
