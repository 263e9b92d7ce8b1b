#ifndef WCS_PARALLEL_HPP
#define WCS_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wcs {

/// Worker count: WCS_THREADS overrides, otherwise hardware concurrency.
inline std::size_t thread_count() {
  if (const char* env = std::getenv("WCS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Runs body(i) for i in [0, n). Results must be written to per-index
/// storage by the body; the reduction over that storage stays with the
/// caller and is therefore deterministic regardless of thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wcs

#endif
