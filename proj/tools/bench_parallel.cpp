// Benchmark of the OpenMP sweep kernels against the serial reference path.
// Each kernel writes per-index results, so the two paths must agree exactly;
// the comparison is printed alongside the timings.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "griff/checks.hpp"
#include "griff/heights.hpp"
#include "griff/milnor.hpp"
#include "griff/parallel.hpp"
#include "griff/series.hpp"

using namespace griff;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct BenchRow {
    std::string name;
    long long cases;
    double serial_ms;
    double parallel_ms;
    bool identical;
};

BenchRow bench_chow_grid(int threads) {
    const int max_n = 6, max_d = 7, deg_range = 6;
    const long long span = 2ll * deg_range + 1;
    const long long count = static_cast<long long>(max_n) * (max_d - 1) * span * span;
    auto point = [&](long long idx) {
        long long i = idx;
        const long long dm = i % span;
        i /= span;
        const long long de = i % span;
        i /= span;
        const int d = static_cast<int>(i % (max_d - 1)) + 2;
        const int N = static_cast<int>(i / (max_d - 1)) + 1;
        const PencilGeometry g(N, d, Integer(de - deg_range), Integer(dm - deg_range));
        const ChowClass lhs = critical_cycle_from_series(g);
        const ChowClass rhs = critical_cycle_closed(g);
        return integrate(lhs) == integrate(rhs) && lhs == rhs;
    };
    std::vector<uint8_t> serial(static_cast<size_t>(count)), parallel(static_cast<size_t>(count));
    const double s_ms = time_ms([&] {
        indexed_for_serial(count, [&](long long i) { serial[static_cast<size_t>(i)] = point(i); });
    });
    const double p_ms = time_ms([&] {
        indexed_for_openmp(count, threads, [&](long long i) { parallel[static_cast<size_t>(i)] = point(i); });
    });
    return {"chow identity grid", count, s_ms, p_ms, serial == parallel};
}

BenchRow bench_milnor(int threads) {
    // Per-degree rank computations inside hilbert_dims are the parallel axis.
    const HomogeneousPoly F = fermat(3, 5);
    GradedQuotientDims serial_dims, parallel_dims;
    const double s_ms = time_ms([&] { serial_dims = hilbert_dims(F, 1); });
    const double p_ms = time_ms([&] { parallel_dims = hilbert_dims(F, threads); });
    return {"milnor graded ranks (N=3, delta=5)", static_cast<long long>(serial_dims.dims.size()),
            s_ms, p_ms, serial_dims.dims == parallel_dims.dims};
}

BenchRow bench_height_scenarios(int threads) {
    const std::vector<Scenario> scenarios = enumerate_feasible_scenarios(5, 6, 4, 6, 12, 10000);
    const long long count = static_cast<long long>(scenarios.size());
    std::vector<std::string> serial(static_cast<size_t>(count)), parallel(static_cast<size_t>(count));
    auto point = [&](long long i) {
        const Scenario& s = scenarios[static_cast<size_t>(i)];
        return stable_height_weight_formula(s.geom, s.fibers).to_string() + "|" +
               stable_height_chow_integrals(s.geom, s.fibers).to_string();
    };
    const double s_ms = time_ms([&] {
        indexed_for_serial(count, [&](long long i) { serial[static_cast<size_t>(i)] = point(i); });
    });
    const double p_ms = time_ms([&] {
        indexed_for_openmp(count, threads, [&](long long i) { parallel[static_cast<size_t>(i)] = point(i); });
    });
    return {"height scenario sweep", count, s_ms, p_ms, serial == parallel};
}

}  // namespace

int main(int argc, char** argv) {
    int threads = hardware_threads();
    if (argc > 1) threads = std::max(1, std::atoi(argv[1]));
    std::printf("threads for the parallel path: %d\n\n", threads);
    std::printf("%-38s %10s %12s %12s %9s %10s\n", "kernel", "cases", "serial ms", "openmp ms",
                "speedup", "identical");

    const BenchRow rows[] = {bench_chow_grid(threads), bench_milnor(threads),
                             bench_height_scenarios(threads)};
    bool all_identical = true;
    for (const BenchRow& r : rows) {
        std::printf("%-38s %10lld %12.1f %12.1f %8.2fx %10s\n", r.name.c_str(), r.cases, r.serial_ms,
                    r.parallel_ms, r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9),
                    r.identical ? "yes" : "NO");
        all_identical = all_identical && r.identical;
    }
    if (!all_identical) {
        std::printf("\nERROR: serial and parallel paths disagree\n");
        return 1;
    }
    return 0;
}
