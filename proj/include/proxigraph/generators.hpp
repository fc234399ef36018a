#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "proxigraph/geometry.hpp"

namespace proxigraph {

enum class Generator { kUniform, kGaussian, kClustered };

std::string to_string(Generator g);
Generator parse_generator(const std::string& name);

/// Coordinates on the dyadic grid 2^-20, so every point is an exact rational.
/// uniform:   the unit square.
/// gaussian:  normal around (1/2, 1/2) with deviation 0.15.
/// clustered: normal around three uniform centers with deviation 0.1.
/// Duplicates are redrawn. Deterministic per (n, generator, seed).
PointSet random_point_set(std::size_t n, Generator g, std::uint64_t seed);

/// Per-trial seed derived from a base seed and a trial counter (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

}  // namespace proxigraph
