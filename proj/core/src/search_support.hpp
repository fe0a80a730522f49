#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace hcnlab::detail {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline(Clock::time_point start, std::optional<std::chrono::milliseconds> limit)
      : limit_(limit) {
    if (limit) at_ = start + *limit;
  }

  /// Reads the clock; latches once expired so every worker sees it.
  bool poll() {
    if (expired_.load(std::memory_order_relaxed)) return true;
    if (limit_ && Clock::now() >= at_) {
      expired_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  bool expired() const { return expired_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::chrono::milliseconds> limit_;
  Clock::time_point at_{};
  std::atomic<bool> expired_{false};
};

/// Runs body(worker, partition) for partitions [0, count) on `workers`
/// threads. Partitions are handed out in increasing order; a partition is
/// skipped when skip(partition) is true at pickup time.
template <class Body, class Skip>
void for_each_partition(std::size_t count, unsigned workers, Body&& body,
                        Skip&& skip) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned worker) {
    for (;;) {
      const std::size_t p = next.fetch_add(1, std::memory_order_relaxed);
      if (p >= count) return;
      if (skip(p)) continue;
      body(worker, p);
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
}

/// Lowers `target` to `value` if smaller.
inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t current = target.load();
  while (value < current && !target.compare_exchange_weak(current, value)) {
  }
}

}  // namespace hcnlab::detail
