#pragma once

#include <cstddef>
#include <functional>

namespace partstat {

/// Worker count from PARTITION_SIEVE_THREADS (integer >= 1). When unset the
/// hardware concurrency is used. Throws Error(invalid_argument) on a
/// malformed value.
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Items are
/// handed out dynamically; the first exception thrown by any body is
/// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace partstat
