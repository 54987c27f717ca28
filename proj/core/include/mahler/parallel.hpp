#pragma once

#include <cstddef>
#include <functional>

namespace mahler {

// Worker count: MAHLER_THREADS if set and positive, else the hardware count.
unsigned thread_count();

// Calls fn(i) for i in [0, n) on up to thread_count() threads. fn must only
// write to slots owned by i, so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mahler
