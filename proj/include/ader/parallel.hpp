#pragma once

#include <functional>

namespace ader {

/// Thread count from ADER_NUM_THREADS, clamped to >= 1; 1 when unset.
int default_thread_count();

/// Splits [0, count) into contiguous chunks, one per thread, and calls
/// body(begin, end, chunk). Chunk boundaries depend only on count and
/// threads. The first exception (lowest chunk) is rethrown after joining.
void parallel_for(int count, int threads, const std::function<void(int, int, int)>& body);

}  // namespace ader
