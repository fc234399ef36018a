#pragma once

#include <cstddef>
#include <functional>

namespace proxigraph {

/// Worker cap: PROXIGRAPH_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(0..count-1) on up to worker_count() threads. Indices are handed
/// out by an atomic counter, so callers must write results into per-index
/// slots to stay schedule-independent. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace proxigraph
