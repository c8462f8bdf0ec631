#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

namespace rbh {

inline unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls fn(c) for every chunk index c in [0, chunks) on up to `jobs` threads
/// and returns the results indexed by chunk, so the output never depends on
/// scheduling. The exception from the lowest failing chunk is rethrown.
template <class Fn>
auto run_chunks(std::size_t chunks, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        results[c] = fn(c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1u), chunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Random stream for one chunk of a sampled run, derived from (seed, chunk)
/// alone.
class ChunkRng {
 public:
  ChunkRng(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t bits() { return engine_(); }

  // unbiased value in [0, n); std distributions are not portable across
  // standard libraries, so rejection on raw bits is used instead
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= limit) return r % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rbh
