#ifndef FARSWARM_PARALLEL_HPP
#define FARSWARM_PARALLEL_HPP

#include <functional>

namespace farswarm {

// Worker count for parallel loops and ensemble pools. FARSWARM_THREADS caps
// it; defaults to the hardware concurrency. Always >= 1.
int worker_count();

// Runs fn(begin, end) over a partition of [0, n) on `workers` threads.
// Chunks are fixed-size and writes must be disjoint per index, so results are
// identical for any worker count.
void parallel_for(int n, int workers, const std::function<void(int, int)>& fn);

}  // namespace farswarm

#endif
