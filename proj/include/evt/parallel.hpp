#pragma once

#include <cstddef>
#include <functional>

namespace evt {

/// Worker count: EVT_ENTROPY_THREADS if set (>= 1), else hardware concurrency.
[[nodiscard]] std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index is visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace evt
