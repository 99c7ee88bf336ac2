#pragma once

#include <cstddef>
#include <functional>

namespace texdim {

// Worker cap: TEXDIM_THREADS when set (>=1), otherwise hardware concurrency.
unsigned worker_count();

// Runs fn(first, last) over [0, count) split into fixed-size chunks handed
// to a small thread pool. Chunk boundaries do not depend on the number of
// workers, so callers that reduce per-chunk results in index order get
// scheduling-independent output. Exceptions propagate to the caller.
void parallel_chunks(std::size_t count, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace texdim
