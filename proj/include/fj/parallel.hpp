#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace fj {

/// Worker count used by the sweeps; 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs task(i) for i in [0, count) across the worker pool and returns the
/// smallest i for which task(i) returned true. Tasks above the current best
/// are skipped, so the answer does not depend on scheduling.
std::optional<std::size_t> parallel_find_first(std::size_t count,
                                               const std::function<bool(std::size_t)>& task);

/// Runs task(i) for every i in [0, count) across the worker pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace fj
