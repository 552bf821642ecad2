#ifndef CAMON_PARALLEL_HPP_
#define CAMON_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace camon {

/// Runs fn(i) for i in [0, n).  With workers > 1 the range is split into
/// contiguous chunks; each index is processed exactly once and results must
/// be written to per-index slots, so output is identical to the serial run.
inline void parallel_for(std::size_t n, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nw = std::min<std::size_t>(workers, n);
  std::vector<std::thread> threads;
  threads.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t lo = n * w / nw;
    const std::size_t hi = n * (w + 1) / nw;
    threads.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace camon

#endif  // CAMON_PARALLEL_HPP_
