#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace thinbase {

template <class Witness>
struct SearchResult {
  std::int64_t value = 0;
  Witness witness{};
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

// Cancellation view handed to each partition. A partition may stop early
// once some partition with a smaller index has reported a terminal result;
// its own result is then discarded.
class PartitionToken {
 public:
  PartitionToken(std::size_t index, const std::atomic<std::size_t>& first_terminal)
      : index_(index), first_terminal_(first_terminal) {}

  std::size_t index() const noexcept { return index_; }
  bool cancelled() const noexcept {
    return first_terminal_.load(std::memory_order_relaxed) < index_;
  }

 private:
  std::size_t index_;
  const std::atomic<std::size_t>& first_terminal_;
};

// Runs fn(token) for partitions 0..count-1 on up to `threads` workers.
// Part must expose a `bool terminal` member. Returns the results of
// partitions 0..t where t is the smallest terminal index (or all partitions
// when none is terminal). Each partition runs sequentially and only reads
// the cancellation flag for partitions after it, so the returned prefix is
// identical for every thread count and schedule.
template <class Part, class Fn>
std::vector<Part> run_ordered_partitions(std::size_t count, unsigned threads,
                                         Fn&& fn) {
  std::vector<std::optional<Part>> results(count);
  std::atomic<std::size_t> first_terminal{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= count) return;
      if (first_terminal.load(std::memory_order_relaxed) < idx) continue;
      PartitionToken token(idx, first_terminal);
      Part part = fn(token);
      if (token.cancelled()) continue;
      if (part.terminal) {
        std::size_t cur = first_terminal.load(std::memory_order_relaxed);
        while (idx < cur &&
               !first_terminal.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
      }
      results[idx] = std::move(part);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t stop = std::min(count, first_terminal.load() == std::numeric_limits<std::size_t>::max()
                                               ? count
                                               : first_terminal.load() + 1);
  std::vector<Part> out;
  out.reserve(stop);
  for (std::size_t i = 0; i < stop; ++i) out.push_back(std::move(*results[i]));
  return out;
}

}  // namespace thinbase
