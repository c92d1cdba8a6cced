#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wreath {

/// 0 means "use the available hardware parallelism".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into `chunks` contiguous ranges and runs
/// fn(chunk, begin, end) for each, spreading chunks across `workers`
/// threads. Callers write into per-chunk slots and combine them in chunk
/// order, which keeps results independent of the worker count.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned workers, Fn&& fn) {
  if (chunks == 0) return;
  auto range = [&](std::size_t c) {
    return std::pair{count * c / chunks, count * (c + 1) / chunks};
  };
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      const auto [b, e] = range(c);
      fn(c, b, e);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < chunks; c += workers) {
          const auto [b, e] = range(c);
          fn(c, b, e);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Chunk count used by the counting loops; fixed so that partial results
/// are combined the same way for every worker count.
inline std::size_t default_chunks(std::size_t count) {
  return std::clamp<std::size_t>(count / 256, 1, 64);
}

}  // namespace wreath
