// Serial and OpenMP execution of independent per-index work. The serial loop
// is the reference path: the parallel path must produce bit-identical results
// because every task writes only its own output slot. Tests compare the two
// and the benchmark tool times them against each other.

#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace griff {

template <typename Fn>
void indexed_for_serial(long long count, Fn&& fn) {
    for (long long i = 0; i < count; ++i) fn(i);
}

template <typename Fn>
void indexed_for_openmp(long long count, int threads, Fn&& fn) {
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
#endif
    (void)threads;
    indexed_for_serial(count, fn);
}

// Dispatch on the requested thread count; threads <= 1 takes the serial path.
template <typename Fn>
void indexed_for(long long count, int threads, Fn&& fn) {
    if (threads > 1) {
        indexed_for_openmp(count, threads, fn);
    } else {
        indexed_for_serial(count, fn);
    }
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// GRIFF_THREADS caps sweep parallelism; unset or unparsable means 1.
inline int env_thread_cap() {
    const char* raw = std::getenv("GRIFF_THREADS");
    if (raw == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return 1;
    return static_cast<int>(v);
}

}  // namespace griff
