#include "fj/parallel.hpp"

#include <exception>
#include <mutex>

namespace fj {

namespace {
std::atomic<std::size_t> g_threads{0};

std::size_t resolved_threads() {
  std::size_t n = g_threads.load();
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return n;
}

void run_workers(std::size_t count, const std::function<void(std::atomic<std::size_t>&)>& worker) {
  std::atomic<std::size_t> next{0};
  const std::size_t n = std::min(resolved_threads(), std::max<std::size_t>(count, 1));
  if (n <= 1) {
    worker(next);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      try {
        worker(next);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}
}  // namespace

void set_thread_count(std::size_t n) { g_threads.store(n); }

std::size_t thread_count() { return resolved_threads(); }

std::optional<std::size_t> parallel_find_first(std::size_t count,
                                               const std::function<bool(std::size_t)>& task) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  run_workers(count, [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < count; i = next++) {
      if (i > best.load()) break;
      if (task(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  });
  if (best.load() == none) return std::nullopt;
  return best.load();
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
  run_workers(count, [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  });
}

}  // namespace fj
