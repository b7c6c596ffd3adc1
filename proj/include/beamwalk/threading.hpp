#pragma once

#include <cstdint>
#include <functional>

namespace beamwalk {

// Global worker cap (CLI --threads). Defaults to hardware concurrency.
void set_max_threads(int k);
int max_threads();

// Runs fn(i) for i in [0, n). Work is chunked across at most max_threads()
// workers; with 1 thread it degenerates to a plain loop. fn must not throw
// across iterations that share state.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

}  // namespace beamwalk
