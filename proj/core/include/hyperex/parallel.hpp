#pragma once

#include <cstddef>
#include <functional>

namespace hyperex {

/// Number of worker threads used by the parallel oracles (hardware
/// concurrency, overridable through HYPEREX_THREADS).
unsigned worker_count();

/// Runs body(i) for i in [0, count) on worker threads. Every index is
/// visited exactly once; callers write results into pre-sized slots so the
/// reduction order is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) sum over a contiguous range; deterministic for a given
/// input order.
double pairwise_sum(const double* values, std::size_t n);

}  // namespace hyperex
