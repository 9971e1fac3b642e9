#pragma once

#include <cstddef>
#include <functional>

namespace geodex {

// Worker count from GEODEX_WORKERS, defaulting to hardware concurrency.
unsigned worker_count();

// Calls body(i) for i in [0, count) on up to `workers` threads. Indices are
// handed out in contiguous chunks; body must be safe to call concurrently.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace geodex
