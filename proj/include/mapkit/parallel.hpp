#pragma once

#include <cstddef>
#include <functional>

namespace mapkit {

/// Worker count: MAPKIT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls body(i) for every i in [0, n) on up to thread_count() threads.
/// Indices are handed out dynamically; callers must make results independent
/// of scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mapkit
