#include "gue/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gue::threading {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(); }

void set_thread_count(int count) {
  g_threads.store(std::max(1, count));
}

void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  const int n = end - begin;
  if (n <= 0) return;
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<int> next{begin};
  constexpr int kChunk = 8;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int lo = next.fetch_add(kChunk);
        if (lo >= end) return;
        const int hi = std::min(lo + kChunk, end);
        for (int i = lo; i < hi; ++i) body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gue::threading
