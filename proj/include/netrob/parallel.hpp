#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace netrob {

// NETROB_THREADS caps the pool; otherwise hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("NETROB_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n). fn must confine writes to i-indexed slots so
// results stay deterministic under any schedule; reductions happen serially
// at the call site afterwards.
template <typename Fn>
void parallel_for(std::uint32_t n, Fn&& fn) {
  const std::uint32_t workers = std::min<std::uint32_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::uint32_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint32_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint32_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace netrob
