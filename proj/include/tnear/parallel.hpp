#pragma once

#if defined(_OPENMP)
#include <omp.h>
#define TNEAR_OMP_ENABLED 1
#else
#define TNEAR_OMP_ENABLED 0
#endif

namespace tnear {

/// Threads an OpenMP parallel region would use; 1 without OpenMP.
inline int max_threads() {
#if TNEAR_OMP_ENABLED
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_num_threads([[maybe_unused]] int n) {
#if TNEAR_OMP_ENABLED
    omp_set_num_threads(n);
#endif
}

}  // namespace tnear
