// Benchmark the serial reference against the OpenMP column-parallel kernels:
// exact table fill and the two-route verification sweep. The parallel result
// is compared cell-for-cell with the serial one before timings are reported.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "pbern/pbern.hpp"

namespace {

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        best = std::min(best, dt.count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs OpenMP benchmark for the exact table kernels"};
    int n_max = 64, p_max = 16, repeats = 3;
    app.add_option("--n-max", n_max, "Largest n")->check(CLI::NonNegativeNumber);
    app.add_option("--p-max", p_max, "Largest p")->check(CLI::NonNegativeNumber);
    app.add_option("--repeat", repeats, "Repetitions, best time wins")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("openmp: enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build); both columns run the same code\n");
#endif
    std::printf("grid: n_max = %d, p_max = %d, best of %d\n\n", n_max, p_max, repeats);

    pbern::PBernoulliTable serial_table, parallel_table;
    const double t_fill_serial =
        time_best_of(repeats, [&] { serial_table = pbern::pbern_table_serial(n_max, p_max); });
    const double t_fill_parallel =
        time_best_of(repeats, [&] { parallel_table = pbern::pbern_table(n_max, p_max); });
    const bool fill_identical = serial_table == parallel_table;

    const double t_verify_serial = time_best_of(
        repeats, [&] { (void)pbern::verify_methods(n_max, p_max, /*parallel=*/false); });
    const double t_verify_parallel = time_best_of(
        repeats, [&] { (void)pbern::verify_methods(n_max, p_max, /*parallel=*/true); });

    std::printf("%-12s %12s %12s %9s %10s\n", "kernel", "serial [s]", "openmp [s]", "speedup",
                "identical");
    std::printf("%-12s %12.4f %12.4f %8.2fx %10s\n", "table-fill", t_fill_serial,
                t_fill_parallel, t_fill_serial / t_fill_parallel,
                fill_identical ? "yes" : "NO");
    std::printf("%-12s %12.4f %12.4f %8.2fx %10s\n", "verify", t_verify_serial,
                t_verify_parallel, t_verify_serial / t_verify_parallel, "-");

    return fill_identical ? 0 : 1;
}
