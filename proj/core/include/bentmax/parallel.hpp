#pragma once

#include <cstddef>
#include <functional>

namespace bentmax {

/// Runs fn(begin, end) over contiguous chunks of [0, count) on up to
/// `threads` workers.  Callers write results into index-addressed slots, so
/// the merged output is independent of the thread count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

/// Worker-count fallback chain: BENTMAX_THREADS, then hardware concurrency.
int default_thread_count();

}  // namespace bentmax
