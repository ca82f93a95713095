#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace apnforge {

/// 0 means "one per hardware thread".
inline unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// fn(begin, end, chunk_index). Chunk boundaries depend only on n and the
/// worker count, so callers that merge per-chunk results in chunk order get
/// deterministic output.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), n));
  if (chunks == 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    threads.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
  }
  for (auto& t : threads) t.join();
}

/// Number of chunks parallel_chunks will use for n items.
inline std::size_t chunk_count(std::size_t n, unsigned workers) noexcept {
  return std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), n));
}

}  // namespace apnforge
