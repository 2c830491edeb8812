#ifndef INVBANACH_PARALLEL_HPP
#define INVBANACH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace invbanach {

/// Thread cap shared by all parallel loops. INVBANACH_THREADS, when set,
/// caps (or raises, up to hardware) the number of worker threads; the
/// default is single-threaded. Results never depend on the cap: every
/// parallel loop merges per-chunk results in index order.
inline int max_threads() {
  static const int cached = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("INVBANACH_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, hw));
    }
    return 1;
  }();
  return cached;
}

/// Runs fn(begin, end) over disjoint chunks of [0, count). Chunk boundaries
/// depend only on count and the thread cap.
inline void parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
  int threads = std::min<std::size_t>(max_threads(), count == 0 ? 1 : count);
  if (threads <= 1) {
    fn(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace invbanach

#endif  // INVBANACH_PARALLEL_HPP
