#pragma once

#include <cstddef>
#include <functional>

namespace mgp {

// Global worker cap for block-parallel loops (0 = hardware concurrency).
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, count) on up to max_threads() workers. Work items
// must write only to their own output slots; the fixed item indexing makes
// results independent of the schedule and of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mgp
