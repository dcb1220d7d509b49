#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace gdav {

using Clock = std::chrono::steady_clock;

/// Shared knobs of the level-wise searches.
struct SearchOptions {
  /// Largest length computed; nullopt selects the module default.
  std::optional<std::size_t> max_len;
  unsigned threads = 1;
  /// Checked only between levels.
  std::optional<Clock::time_point> deadline;

  bool expired() const { return deadline && Clock::now() >= *deadline; }
};

/// Runs f(worker, i) for i in [0, count) on up to `threads` workers.
/// Work is handed out dynamically; the first exception is rethrown.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) f(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(w, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

inline unsigned worker_count(unsigned threads, std::size_t count) {
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, count)));
}

}  // namespace gdav
