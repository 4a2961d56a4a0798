#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "locmaass/summation.hpp"

namespace locmaass {

/// Worker cap: LOCMAASS_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Overrides the worker cap for this process (0 restores the default).
void set_worker_count(std::size_t n);

/// Fixed chunk length of the deterministic reduction tree.
inline constexpr std::size_t kReductionChunk = 4096;

/// Sums term(i) for i in [0, n). Each fixed-size chunk is accumulated with
/// compensated summation and the chunk totals are combined in index order,
/// so the result is bitwise identical for any worker count.
cplx deterministic_sum(std::size_t n, const std::function<cplx(std::size_t)> &term);

/// Runs body(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace locmaass
