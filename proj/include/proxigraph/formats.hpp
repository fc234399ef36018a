#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "proxigraph/cycle.hpp"
#include "proxigraph/feasibility.hpp"
#include "proxigraph/geometry.hpp"
#include "proxigraph/proximity.hpp"
#include "proxigraph/verifier.hpp"
#include "proxigraph/witness_lab.hpp"

namespace proxigraph {

inline constexpr const char* kToolVersion = "proxigraph 1.0.0";

// All text formats are line based: a "<name> v1" header, then records of
// whitespace-separated fields. Blank lines and anything after '#' are ignored.

struct PointSetFile {
  PointSet points;
  std::vector<std::string> labels;  ///< one per point, empty when absent
};

/// "pointset v1", then "x y [label]" per line. Throws ParseError with a
/// 1-based line and column, or Error for duplicate points.
PointSetFile parse_point_set(std::string_view text);
/// Coordinates are written as canonical rationals, so parsing is lossless.
std::string format_point_set(const PointSet& s, const std::vector<std::string>& labels = {});

/// "graph v1", "kind K", "k K", "n N", "edges M", then M lines "a b".
std::string format_graph(const GeometricGraph& g);
/// Rebuilds a graph on `points`; throws ParseError on malformed or
/// out-of-range input, including a vertex count that differs from points.
GeometricGraph parse_graph(std::string_view text, std::shared_ptr<const PointSet> points);

/// "cycle v1", "n N", "order v_0 .. v_{n-1}", "ds d_1 .. d_n" (exact squared lengths).
std::string format_cycle(const HamCycle& c, const PointSet& s);
/// Reads the order; the ds line is optional and, when present, must match.
HamCycle parse_cycle(std::string_view text, const PointSet& s);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// "audit v1": tool version, input hash, parameters, one "edge" record per
/// cycle edge and the overall verdict.
std::string format_audit(const TheoremAudit& audit, std::string_view input_bytes);

/// "feasibility v1": kappa, start, max residual, the assignment and each
/// positive residual.
std::string format_feasibility(const FeasibilitySystem& sys, const FeasibilityResult& r);

/// "manifest v1": search parameters, one "witness" record
/// (file, claim, seed, kappa) and one "trial" record per trial.
std::string format_manifest(const SearchResult& r, std::size_t n, std::uint64_t base_seed,
                            const std::string& witness_file);

/// Writes best.pts, best.cycle and manifest.txt into dir (created if missing).
void write_witness_store(const std::filesystem::path& dir, const SearchResult& r, std::size_t n,
                         std::uint64_t base_seed);

std::string read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace proxigraph
