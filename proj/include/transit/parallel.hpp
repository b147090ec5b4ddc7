#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace transit {

/// Resolves a thread-count request: 0 means "all hardware threads" when
/// built with OpenMP and 1 otherwise.
inline int resolve_threads(int requested) {
#if defined(_OPENMP)
    return requested <= 0 ? omp_get_max_threads() : requested;
#else
    (void)requested;
    return 1;
#endif
}

// Index-parallel map. f(i) must be independent across indices, must not
// throw, and must write its result to a preallocated slot so that serial
// and parallel execution produce identical bytes.
template <class F>
inline void parallel_for(std::ptrdiff_t n, int threads, F&& f) {
    const int t = resolve_threads(threads);
#if defined(_OPENMP)
    if (t > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(t)
        for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
        return;
    }
#endif
    (void)t;
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

}  // namespace transit
