// Worker-count policy.
//
// Resolution order: set_thread_count() override, then the SLABLAB_THREADS
// environment variable, then 1.  The default is sequential on purpose:
// results never depend on the worker count, but timing does, and one worker
// is the reproducible baseline.

#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace slablab {

namespace detail {
inline int& thread_override() {
  static int n = 0;
  return n;
}
}  // namespace detail

inline void set_thread_count(int n) { detail::thread_override() = n > 0 ? n : 0; }

inline int thread_count() {
  if (detail::thread_override() > 0) return detail::thread_override();
  if (const char* env = std::getenv("SLABLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Runs fn(i) for i in [0, n) across thread_count() workers.  fn must be safe
// to call concurrently for distinct i; iteration order is unspecified.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::size_t(thread_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace slablab
