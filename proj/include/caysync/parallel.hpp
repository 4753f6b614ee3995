#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace caysync::par {

// Process-wide worker count. 0 means "use the default", which is the
// CAYSYNC_THREADS environment variable if set, else hardware concurrency.
inline std::atomic<int>& thread_override() {
  static std::atomic<int> v{0};
  return v;
}

inline void set_thread_count(int threads) { thread_override().store(threads); }

inline int thread_count() {
  const int forced = thread_override().load();
  if (forced > 0) return forced;
  if (const char* env = std::getenv("CAYSYNC_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [0, total) into contiguous chunks, runs `work(begin, end)` on each
// from a pool of threads, and returns the per-chunk results in chunk order.
// Reductions folded over this vector in order are independent of the thread
// count, so parallel runs are observationally identical to sequential ones.
template <typename R>
std::vector<R> map_chunks(std::uint64_t total, const std::function<R(std::uint64_t, std::uint64_t)>& work) {
  const int threads = thread_count();
  if (total == 0) return {};
  const std::uint64_t want = static_cast<std::uint64_t>(threads) * 4;
  const std::uint64_t chunks = total < want ? total : want;
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;

  std::vector<R> results(static_cast<std::size_t>(chunks));
  if (threads <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t b = c * chunk_size;
      const std::uint64_t e = std::min(total, b + chunk_size);
      results[static_cast<std::size_t>(c)] = work(b, e);
    }
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  auto runner = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t b = c * chunk_size;
      const std::uint64_t e = std::min(total, b + chunk_size);
      results[static_cast<std::size_t>(c)] = work(b, e);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), chunks));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int i = 0; i < spawn; ++i) pool.emplace_back(runner);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace caysync::par
