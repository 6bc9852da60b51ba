// Benchmark: serial reference vs OpenMP trial loop for the SIC coverage
// simulator, plus a consistency check that both produce identical reports.

#include "nomacov/montecarlo.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nomacov;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same(const SimResult& a, const SimResult& b) {
    for (int t = 0; t < 2; ++t) {
        const TierSim& x = t == 0 ? a.terrestrial : a.aerial;
        const TierSim& y = t == 0 ? b.terrestrial : b.aerial;
        if (x.stage_successes != y.stage_successes) return false;
        if (x.mean_cond_sinr != y.mean_cond_sinr) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;
    const std::uint64_t seed = 99;
    NetworkConfig cfg = default_config(5);
    cfg.m = {3, 1, 1, 1, 1};

    SimResult serial_res, parallel_res;
    const double t_serial =
        time_ms([&] { serial_res = run_coverage_sim_serial(cfg, trials, seed); });
    const double t_parallel =
        time_ms([&] { parallel_res = run_coverage_sim(cfg, trials, seed); });

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("trials             : %llu (M=%d, both tiers)\n",
                static_cast<unsigned long long>(trials), cfg.M);
    std::printf("serial reference   : %9.1f ms  (%.2f Mtrials/s)\n", t_serial,
                trials / t_serial / 1e3);
    std::printf("openmp (%2d threads): %9.1f ms  (%.2f Mtrials/s)\n", threads, t_parallel,
                trials / t_parallel / 1e3);
    std::printf("speedup            : %.2fx\n", t_serial / t_parallel);
    std::printf("bit-identical      : %s\n", same(serial_res, parallel_res) ? "yes" : "NO");
    return same(serial_res, parallel_res) ? 0 : 1;
}
