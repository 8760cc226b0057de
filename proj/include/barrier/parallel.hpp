#ifndef BARRIER_PARALLEL_HPP
#define BARRIER_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace barrier {

// Worker count: min(hardware, BARRIER_RHS_THREADS when set and >= 1).
int worker_count();

// Splits [0, n) into contiguous chunks, one thread per chunk. Runs inline
// when a single worker suffices.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace barrier

#endif
