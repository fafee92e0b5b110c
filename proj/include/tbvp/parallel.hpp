#ifndef TBVP_PARALLEL_HPP
#define TBVP_PARALLEL_HPP

#include <functional>

namespace tbvp {

/// Worker count: TBVP_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. Each
/// index is visited once; results must be written to per-index slots so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace tbvp

#endif  // TBVP_PARALLEL_HPP
