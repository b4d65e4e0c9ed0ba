#pragma once

#include <cstddef>
#include <functional>

namespace weilforms {

/// A parallel-map capability: call body(i) for every i in [0, count).
/// Implementations may run bodies concurrently; callers write results into
/// pre-sized slots so the outcome does not depend on scheduling.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

ParallelFor sequential_for();

/// Fixed-size pool of std::threads pulling indices from a shared counter.
/// The first exception thrown by any body is rethrown on the calling thread.
ParallelFor threaded_for(unsigned workers);

}  // namespace weilforms
