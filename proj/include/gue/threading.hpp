#pragma once

#include <functional>

namespace gue::threading {

// Worker count used by the parallel loops. Results never depend on it:
// every parallel loop writes to disjoint slots and reduces in index order.
int thread_count();
void set_thread_count(int count);

// Runs body(i) for i in [begin, end), possibly across threads.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace gue::threading
