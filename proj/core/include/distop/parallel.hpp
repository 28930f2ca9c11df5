#pragma once

#include <cstddef>
#include <functional>

namespace distop {

/// Worker threads used for subset-level parallelism: the DISTOP_THREADS
/// environment variable if set to a positive integer, otherwise the hardware
/// concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Iterations must not share mutable state.
/// Exceptions thrown by body are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace distop
