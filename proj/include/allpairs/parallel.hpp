#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace allpairs {

inline unsigned worker_count() {
  if (const char* env = std::getenv("ALLPAIRS_THREADS")) {
    const long n = std::atol(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Splits [0, n) into contiguous chunks, one worker thread each. The
/// callable receives (begin, end); outputs must be written by index so the
/// result is independent of the thread count.
inline void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  const unsigned workers = n == 0 ? 1 : static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), n));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace allpairs
