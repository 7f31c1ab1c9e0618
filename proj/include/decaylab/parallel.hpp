#pragma once

#include <cstddef>
#include <functional>

namespace decaylab {

// Worker budget: hardware concurrency clamped by the DECAYLAB_THREADS
// environment variable (values < 1 mean single-threaded).
int thread_budget();

// Runs body(i) for i in [0, n). Indices are partitioned over worker threads;
// each index writes only its own output slots, so results are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace decaylab
