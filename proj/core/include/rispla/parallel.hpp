#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rispla {

/// 0 means "one per hardware thread".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into `workers` contiguous chunks and calls
/// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
/// depend only on (n, workers); callers that key randomness by index and
/// merge per-chunk results in chunk order get identical output for any
/// worker count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(resolve_workers(workers), 1, std::max<std::uint64_t>(n, 1)));
  const std::uint64_t base = n / workers;
  const std::uint64_t extra = n % workers;
  auto bounds = [&](unsigned chunk) {
    const std::uint64_t begin = chunk * base + std::min<std::uint64_t>(chunk, extra);
    return std::pair{begin, begin + base + (chunk < extra ? 1 : 0)};
  };
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned chunk = 0; chunk < workers; ++chunk) {
      threads.emplace_back([&, chunk] {
        try {
          const auto [begin, end] = bounds(chunk);
          fn(chunk, begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rispla
