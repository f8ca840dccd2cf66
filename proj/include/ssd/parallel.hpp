#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ssd {

// Runs fn(begin, end) over contiguous chunks of [0, count). With workers <= 1
// everything happens on the calling thread. The first exception thrown by any
// chunk is rethrown after all threads join.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t n_threads = std::min<std::size_t>(workers, count);
  const std::size_t chunk = (count + n_threads - 1) / n_threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ssd
