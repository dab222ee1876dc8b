#pragma once

#include <cstddef>
#include <functional>

namespace fracspec {

/// Worker count: FRACSPEC_THREADS if set and positive, else hardware concurrency.
int default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers. If any call throws,
/// the exception from the smallest failing index is rethrown after all workers
/// finish, so failures are reported the same way under every schedule.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace fracspec
