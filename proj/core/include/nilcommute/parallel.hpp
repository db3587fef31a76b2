#pragma once

#include <cstddef>
#include <functional>

namespace nilcommute {

// Worker count for batch loops: NILCOMMUTE_THREADS when set (clamped to a
// sane range), otherwise 1. Absence of the variable means single-threaded.
std::size_t configured_threads();

// Runs fn(0..count-1), splitting the index range over configured_threads()
// workers. Each index must write only to its own slot so that results do
// not depend on scheduling; the first exception is rethrown after joining.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace nilcommute
