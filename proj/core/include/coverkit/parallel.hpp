#pragma once

#include <cstddef>
#include <functional>

namespace coverkit {

/// Worker count from the COVERKIT_THREADS environment variable, falling back
/// to the hardware concurrency. Always >= 1.
std::size_t default_worker_count();

/// Runs body(i) for every i in [0, count) on up to `workers` threads.
/// The first exception thrown by any task is rethrown on the caller.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace coverkit
