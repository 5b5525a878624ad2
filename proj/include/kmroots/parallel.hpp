#pragma once

#include <cstddef>

namespace kmroots {

/// Worker count used when a caller passes 0: $KMROOTS_THREADS if set to a
/// positive integer, otherwise std::thread::hardware_concurrency() (min 1).
unsigned default_thread_count();

inline unsigned resolve_threads(unsigned requested) {
  return requested == 0 ? default_thread_count() : requested;
}

}  // namespace kmroots
