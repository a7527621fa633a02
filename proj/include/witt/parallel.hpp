#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace witt {

/// WITT_JOBS if set to a positive integer, else the hardware concurrency.
unsigned default_jobs();

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any body is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// parallel_for that collects one result per index, in index order.
template <class Result, class Body>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Body&& body) {
  std::vector<Result> out(count);
  parallel_for(count, jobs, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace witt
