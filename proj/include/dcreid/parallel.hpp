#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dcreid {

/// Runs fn(i) for i in [0,n) on up to `jobs` threads. Work is claimed from a
/// shared counter; callers index results by i, so output never depends on
/// completion order. The first exception is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::jthread> threads;
  const int count = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  threads.reserve(count);
  for (int t = 0; t < count; ++t) threads.emplace_back(worker);
  threads.clear();  // join
  if (error) std::rethrow_exception(error);
}

}  // namespace dcreid
