#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace hrp {

// Worker count: hardware concurrency, capped by the HRP_THREADS
// environment variable when it holds a positive integer.
unsigned thread_budget();

// Runs body(i) for i in [0, count) over at most thread_budget() threads.
// Indices are handed out in contiguous blocks, so callers that write into
// slot i of a pre-sized vector get schedule-independent results. The first
// exception thrown by any body is rethrown on the calling thread.
// workers == 0 means thread_budget().
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers = 0);

// Same, but body(begin, end, worker) receives a whole block.
void parallel_blocks(std::size_t count, const std::function<void(std::size_t, std::size_t, unsigned)>& body,
                     unsigned workers = 0);

}  // namespace hrp
