#pragma once

#include <optional>
#include <string>
#include <vector>

#include "proxigraph/cycle.hpp"
#include "proxigraph/geometry.hpp"
#include "proxigraph/proximity.hpp"

namespace proxigraph {

struct RenderInput {
  const PointSet* points = nullptr;
  std::vector<Edge> graph_edges;
  std::optional<HamCycle> cycle;
  std::vector<Edge> circles;  ///< edges whose diameter circles are drawn dashed
};

/// SVG 1.1 document: graph edges as solid segments, cycle edges drawn on top
/// in a highlight colour, diameter circles dashed, points as filled dots.
/// The y axis points up and the viewport fits everything with a 5% margin.
/// Output depends only on the input. Throws IndexError for bad indices.
std::string render_svg(const RenderInput& input);

/// Parses "(i,j),(k,l),..." (spaces allowed). Throws ParseError.
std::vector<Edge> parse_edge_list(const std::string& text);

}  // namespace proxigraph
