#pragma once

#include <cstddef>
#include <functional>

namespace slrk {

/// Worker count: `requested` if positive, else the SLRK_THREADS environment
/// variable, else the hardware concurrency.
int resolve_threads(int requested = 0);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers have joined.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace slrk
