#pragma once

#include <cstddef>
#include <functional>

namespace hypocert {

/// Worker count: HYPOCERT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned thread_count();

/// Calls body(i) for i in [0, n). Each index is visited exactly once; results
/// written to per-index slots are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hypocert
