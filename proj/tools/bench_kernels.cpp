// Times the OpenMP kernels against their serial reference implementations on
// graphs near the size cap. Build and run manually:
//   cmake --build build --target bench_kernels && ./build/tools/bench_kernels
#include "drg/kernels.hpp"
#include "drg/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void bench_graph(const char* label, const drg::ExplicitGraph& g, int reps) {
    std::printf("%s: n = %d, diameter = %d\n", label, g.n, g.diameter);

    const double bfs_s = time_ms([&] { drg::kernels::all_pairs_distances_serial(g.adj); }, reps);
    const double bfs_p = time_ms([&] { drg::kernels::all_pairs_distances(g.adj); }, reps);
    std::printf("  all_pairs_distances    serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                bfs_s, bfs_p, bfs_s / bfs_p);

    const double ic_s = time_ms(
        [&] { drg::kernels::intersection_counts_serial(g.adj, g.dist, g.diameter); }, reps);
    const double ic_p =
        time_ms([&] { drg::kernels::intersection_counts(g.adj, g.dist, g.diameter); }, reps);
    std::printf("  intersection_counts    serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                ic_s, ic_p, ic_s / ic_p);

    // Pair statistics over a synthetic embedding with a plausible width.
    const int m = 24;
    Eigen::MatrixXd U(g.n, m);
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < m; ++j) U(i, j) = gauss(rng);

    const double ps_s =
        time_ms([&] { drg::kernels::pair_class_stats_serial(U, g.dist, g.diameter); }, reps);
    const double ps_p =
        time_ms([&] { drg::kernels::pair_class_stats(U, g.dist, g.diameter); }, reps);
    std::printf("  pair_class_stats       serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                ps_s, ps_p, ps_s / ps_p);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel entry points run serially\n");
#endif

    const long long hamming_params[] = {2, 40};
    bench_graph("hamming(2,40)", drg::build_graph("hamming", hamming_params), 3);

    const long long cube_params[] = {10};
    bench_graph("hypercube(10)", drg::build_graph("hypercube", cube_params), 3);

    const long long johnson_params[] = {18, 3};
    bench_graph("johnson(18,3)", drg::build_graph("johnson", johnson_params), 3);
    return 0;
}
