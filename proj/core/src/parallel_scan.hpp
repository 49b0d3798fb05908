#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace leafpow::detail {

// First position in [0, count) at which fn yields a value, evaluated by
// `threads` workers. The result does not depend on the thread count.
template <typename Result, typename Fn>
std::optional<std::pair<std::size_t, Result>> first_feasible(std::size_t count, std::size_t threads,
                                                             Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t pos = 0; pos < count; ++pos) {
      if (auto r = fn(pos)) return std::make_pair(pos, std::move(*r));
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{static_cast<std::size_t>(-1)};
  std::mutex mutex;
  std::optional<Result> result;
  std::exception_ptr failure;
  auto worker = [&]() {
    try {
      while (true) {
        const std::size_t pos = next.fetch_add(1);
        if (pos >= count || pos > best.load()) return;
        if (auto r = fn(pos)) {
          std::lock_guard<std::mutex> lock(mutex);
          if (pos < best.load()) {
            best = pos;
            result = std::move(r);
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex);
      if (!failure) failure = std::current_exception();
      best = 0;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (!result) return std::nullopt;
  return std::make_pair(best.load(), std::move(*result));
}

}  // namespace leafpow::detail
