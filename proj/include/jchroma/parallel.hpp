#pragma once

#include <cstdint>
#include <functional>

namespace jchroma {

// max(1, std::thread::hardware_concurrency())
int default_thread_count();

// Splits [0, total) into one contiguous chunk per worker and runs body(begin,
// end, worker) on its own thread.  The body must not throw; workers write to
// disjoint slots and the caller merges afterwards, so results cannot depend
// on scheduling.
void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              int)>& body);

}  // namespace jchroma
