#pragma once

#include <cstddef>
#include <functional>

namespace copydet {

/// Worker count: explicit value, else COPYDET_THREADS, else hardware.
int resolve_threads(int requested = 0);

/** Runs fn(begin, end) over a partition of [0, n) into contiguous ranges,
 *  one per worker. Ranges depend only on n and the worker count, and each
 *  element is processed exactly once, so per-element results are
 *  independent of scheduling. */
void parallel_for(size_t n, int threads,
                  const std::function<void(size_t, size_t)>& fn);

} // namespace copydet
