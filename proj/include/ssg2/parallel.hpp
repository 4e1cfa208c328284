#pragma once

// Chunked worker pool for embarrassingly parallel scans.  Workers receive
// contiguous index ranges; callers merge per-chunk results in chunk order so
// output stays deterministic regardless of scheduling.

#include <cstdint>
#include <functional>

namespace ssg2 {

// 0 resolves to the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

// Runs body(chunk, begin, end) for a partition of [0, n) into at most
// `threads` contiguous chunks.  Rethrows the first worker exception.
void parallel_chunks(uint64_t n, unsigned threads,
                     const std::function<void(unsigned, uint64_t, uint64_t)>& body);

}  // namespace ssg2
