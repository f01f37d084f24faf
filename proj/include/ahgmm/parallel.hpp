#pragma once

#include <functional>

namespace ahgmm {

/// Worker-thread count for convolution loops. Thread 0 state; results of
/// every operation are bitwise independent of this setting.
void set_num_threads(int n);
int num_threads();

/// Runs fn(i) for i in [begin, end), split into contiguous chunks across
/// the configured worker threads. Each index is processed by exactly one
/// thread, in increasing order within its chunk.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

} // namespace ahgmm
