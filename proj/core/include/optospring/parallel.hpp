#ifndef OPTOSPRING_PARALLEL_HPP
#define OPTOSPRING_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <span>

namespace optospring {

// Worker cap: OPTOSPRING_THREADS when set to a positive integer,
// otherwise the hardware concurrency. Always >= 1.
int max_threads();

// Runs body(begin, end) over contiguous chunks of [0, n). Results must be
// written to per-index slots so the output is schedule-independent.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

// Pairwise (cascade) summation: deterministic for a fixed input order and
// better conditioned than a running sum on long series.
double pairwise_sum(std::span<const double> values);

} // namespace optospring

#endif
