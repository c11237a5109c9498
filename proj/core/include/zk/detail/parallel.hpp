#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace zk::detail {

// Splits [from, to] into fixed-size chunks, evaluates fn(lo, hi) on up to
// `workers` threads, and hands each result to consume() on the calling thread
// in chunk order while later chunks are still running.
template <typename T, typename Fn, typename Consume>
void ordered_chunks(std::uint64_t from, std::uint64_t to, std::uint64_t chunk, unsigned workers, Fn&& fn,
                    Consume&& consume) {
  if (from > to) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t count = (to - from) / chunk + 1;
  auto bounds = [&](std::uint64_t i) {
    const std::uint64_t lo = from + i * chunk;
    return std::pair{lo, std::min(to, lo + (chunk - 1))};
  };
  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1U), count));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto [lo, hi] = bounds(i);
      consume(fn(lo, hi));
    }
    return;
  }

  std::vector<std::optional<T>> slots(count);
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        const auto [lo, hi] = bounds(i);
        T result = fn(lo, hi);
        std::lock_guard lock(mu);
        slots[i].emplace(std::move(result));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);

  std::exception_ptr consumer_failure;
  try {
    for (std::uint64_t i = 0; i < count; ++i) {
      std::optional<T> item;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return slots[i].has_value() || failure != nullptr; });
        if (failure) break;
        item = std::move(slots[i]);
        slots[i].reset();
      }
      consume(std::move(*item));
    }
  } catch (...) {
    consumer_failure = std::current_exception();
    next.store(count);
  }
  for (auto& th : pool) th.join();
  if (consumer_failure) std::rethrow_exception(consumer_failure);
  if (failure) std::rethrow_exception(failure);
}

}  // namespace zk::detail
