#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pg {

/// Worker count: PG_THREADS env var when set, hardware concurrency otherwise.
inline int default_threads() {
  if (const char* env = std::getenv("PG_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Split [0, n) into per-thread chunks, evaluate chunk(begin, end) -> R on
/// each, then fold the partial results IN CHUNK ORDER with merge(acc, part).
/// Chunk boundaries depend only on (n, threads), so any thread count gives
/// the same final value as a sequential scan whenever merge is
/// order-respecting (e.g. max-with-first-witness).
template <class R, class ChunkFn, class MergeFn>
R parallel_reduce(std::size_t n, int threads, R init, ChunkFn chunk, MergeFn merge) {
  if (n == 0) return init;
  std::size_t workers =
      std::min<std::size_t>(n, threads < 1 ? 1 : static_cast<std::size_t>(threads));
  if (workers <= 1) {
    merge(init, chunk(std::size_t{0}, n));
    return init;
  }
  std::vector<R> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t per = (n + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    std::size_t begin = t * per, end = std::min(n, begin + per);
    pool.emplace_back([&, t, begin, end] { parts[t] = chunk(begin, end); });
  }
  for (auto& th : pool) th.join();
  for (auto& part : parts) merge(init, part);
  return init;
}

}  // namespace pg
