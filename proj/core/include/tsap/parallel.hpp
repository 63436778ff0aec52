#pragma once

#include <cstdint>
#include <functional>

namespace tsap {

// Worker count: TSAP_THREADS caps it, default is the hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n) across workers. Blocks are handed out
// dynamically, so fn must not depend on execution order; reductions that
// need determinism should write per-index results and combine afterwards
// in index order.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace tsap
