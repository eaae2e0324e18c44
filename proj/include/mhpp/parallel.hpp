#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace mhpp {

/// Worker count used by the exhaustive axiom checks.  Results never depend on it.
unsigned thread_count();
void set_thread_count(unsigned n);

/// Evaluates fn(0), fn(1), ... (each returning std::optional<R>) and returns
/// the engaged result with the smallest index.  With several threads, indices
/// past the best failure found so far are skipped.
template <class R, class Fn>
std::optional<R> first_failure(std::size_t count, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = fn(i)) return r;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  std::optional<R> result;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (auto r = fn(i)) {
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best.store(i);
          result = std::move(r);
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return result;
}

}  // namespace mhpp
