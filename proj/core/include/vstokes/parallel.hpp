#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vstokes {

/// Static partition of [0, n) into `threads` contiguous chunks. Chunk t is
/// always the same range for a given (n, threads), which keeps reductions
/// that merge per-chunk results in chunk order bit-reproducible.
struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};

inline ChunkRange chunk_range(std::size_t n, int threads, int t) {
  std::size_t per = n / threads;
  std::size_t rem = n % threads;
  std::size_t b = t * per + std::min<std::size_t>(t, rem);
  std::size_t e = b + per + (static_cast<std::size_t>(t) < rem ? 1 : 0);
  return {b, e};
}

/// Runs body(chunk_index, begin, end) for every chunk, on `threads` threads.
template <class Body>
void parallel_chunks(std::size_t n, int threads, Body&& body) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2 * static_cast<std::size_t>(threads)) {
    body(0, std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) {
    auto r = chunk_range(n, threads, t);
    pool.emplace_back([&body, t, r] { body(t, r.begin, r.end); });
  }
  auto r0 = chunk_range(n, threads, 0);
  body(0, r0.begin, r0.end);
}

}  // namespace vstokes
