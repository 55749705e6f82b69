#pragma once

#include <cstddef>
#include <functional>

namespace laz {

/// Worker count: set_worker_count override, else LAZ_FORGE_THREADS, else
/// hardware concurrency (at least 1).
std::size_t worker_count();
/// 0 restores the default lookup.
void set_worker_count(std::size_t n);

/// Calls fn(i) for i in [0, n) across workers. Each index runs exactly once;
/// callers write into per-index slots and reduce afterwards so results do not
/// depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace laz
