#ifndef PARKLC_SRC_PARALLEL_HPP
#define PARKLC_SRC_PARALLEL_HPP

// Internal: split [0, total) into contiguous chunks, one per worker.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace parklc::detail {

inline unsigned worker_count(std::uint64_t total, unsigned threads) {
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::max(1u, threads))));
}

// Calls fn(worker, lo, hi) for each chunk. Chunk boundaries depend only on
// `total` and the worker count, and callers merge results in worker order.
template <class Fn>
void for_each_chunk(std::uint64_t total, unsigned workers, Fn&& fn) {
  auto bounds = [&](unsigned w) { return total * w / workers; };
  if (workers <= 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { fn(w, bounds(w), bounds(w + 1)); });
  }
}

}  // namespace parklc::detail

#endif  // PARKLC_SRC_PARALLEL_HPP
