#ifndef APERY_DETAIL_PARALLEL_HPP
#define APERY_DETAIL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace apery::detail {

// Runs fn(i) for i in [0, count) on a small thread pool. Tasks must be
// independent; results are expected to land in caller-owned slots indexed by
// i, so the outcome does not depend on scheduling. The first exception is
// rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  n = static_cast<unsigned>(std::min<std::size_t>(n, count));
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next(0);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace apery::detail

#endif
