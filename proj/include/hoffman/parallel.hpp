#ifndef HOFFMAN_PARALLEL_HPP
#define HOFFMAN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hoffman {

/// Worker count: HOFFMAN_THREADS when set to a positive integer (capped at
/// the machine's parallelism), otherwise the machine's parallelism.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Each index runs exactly once; callers
/// write results into per-index slots so the outcome is schedule-independent.
/// The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hoffman

#endif  // HOFFMAN_PARALLEL_HPP
