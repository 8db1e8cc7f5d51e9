// Minimal deterministic parallel loop. Results must be written to
// preallocated, disjoint slots; iteration order across threads is unrelated
// to index order. RADCAL_THREADS caps the worker count.
#pragma once

#include <cstddef>
#include <functional>

namespace radcal {

// Worker count honoring RADCAL_THREADS (>= 1).
unsigned worker_count();

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace radcal
