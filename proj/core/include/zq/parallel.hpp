#pragma once

//
// Minimal data-parallel loop used by the sweep-heavy modules.
//
// Determinism contract: parallel_for partitions [0, n) into contiguous
// ranges; each index is processed by exactly one worker and all visible
// results must be written to per-index (or per-range) slots. Nothing here
// depends on scheduling order, so output is identical for any worker
// count, including ZQ_THREADS=1.
//

#include <cstdint>
#include <functional>

namespace zq {

// Worker count: ZQ_THREADS environment override, else hardware concurrency.
unsigned worker_count();

// Invokes fn(begin, end) on contiguous subranges of [0, n) across workers.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& fn);

} // namespace zq
