#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crossint {

/// Resolves a requested worker count: 0 means the OpenMP default, anything
/// else is taken literally. Without OpenMP everything runs on one thread.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace crossint
