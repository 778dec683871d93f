#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cuecast {

// Worker count for parallel_map: CUECAST_THREADS when set to a positive
// integer, hardware concurrency otherwise, never less than one.
std::size_t thread_cap();

// Applies fn to every index in [0, n) across up to `cap` threads. Each
// result lands at its own index, so the output is identical for any cap.
// The first exception thrown by fn is rethrown after all workers join.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn, std::size_t cap = thread_cap())
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results(n);
  if (n == 0) return results;

  const std::size_t workers = std::min(cap < 1 ? std::size_t{1} : cap, n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace cuecast
