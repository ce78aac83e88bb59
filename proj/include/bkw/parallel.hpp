#pragma once

#include <cstddef>
#include <functional>

namespace bkw {

/// Worker count from BKW_THREADS (unset or 0 = hardware concurrency).
unsigned worker_count();

/// Runs fn(i) for i in [0, count) on up to worker_count() threads. If any
/// call throws, the exception from the lowest failing index is rethrown after
/// all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace bkw
