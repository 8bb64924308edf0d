#pragma once

#include <cstddef>
#include <functional>

namespace systolic {

/// Worker count: hardware concurrency, capped by SYSTOLIC_LAB_THREADS when set.
std::size_t thread_count();

/// Calls fn(i) for every i in [0, n), spread over thread_count() workers.
/// fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace systolic
