#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace redwords {

// 0 or negative requests resolve to the hardware thread count.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..count-1) across a pool.  Tasks are pulled from a shared
// counter, so callers must write results into per-index slots and merge in
// index order for worker-count-independent output.  The lowest-index task
// exception is rethrown after all threads join.
template <typename Fn>
void parallel_for_index(int count, int workers, Fn&& fn) {
  workers = std::min(resolve_workers(workers), count);
  if (count <= 0) return;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::mutex error_mutex;
  int error_index = count;
  std::exception_ptr error;

  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace redwords
