// Times the OpenMP kernels against their serial references on instances
// large enough to matter, and confirms the outputs agree. Not part of
// the test suite; build and run the bcc_bench target directly.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcc/generators.hpp"
#include "bcc/hansel.hpp"
#include "bcc/mv_coloring.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const std::string& kernel, const std::string& instance, double serial_ms,
         double parallel_ms, bool equal) {
    std::printf("%-22s %-28s %10.1f %10.1f %7.2fx   %s\n", kernel.c_str(), instance.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel paths run serially\n\n");
#endif
    std::printf("%-22s %-28s %10s %10s %9s\n", "kernel", "instance", "serial ms", "parallel ms",
                "speedup");

    {
        bcc::BicliqueSystem s = bcc::random_biclique_union(400, 20, 1);
        bcc::Dyadic serial, parallel;
        double ts = time_ms([&] { serial = bcc::enumerate_mean_survivors_serial(s); });
        double tp = time_ms([&] { parallel = bcc::enumerate_mean_survivors(s); });
        row("enumerate_mean", "n=400 m=20 (2^20 masks)", ts, tp, serial == parallel);
    }

    {
        bcc::BicliqueSystem s = bcc::ks_code_cover(64);
        bcc::SweepResult serial, parallel;
        double ts = time_ms([&] { serial = bcc::randomized_sweep_serial(s, 0, 200000); });
        double tp = time_ms([&] { parallel = bcc::randomized_sweep(s, 0, 200000); });
        row("randomized_sweep", "K_64 code cover, 200k seeds", ts, tp,
            serial.survivor_counts == parallel.survivor_counts &&
                serial.all_independent == parallel.all_independent);
    }

    {
        bcc::BicliqueSystem s = bcc::random_biclique_union(2000, 64, 7);
        bcc::MvOptions ser, par;
        ser.parallel = false;
        par.parallel = true;
        bcc::MvResult rs, rp;
        double ts = time_ms([&] { rs = bcc::mv_color(s, ser); });
        double tp = time_ms([&] { rp = bcc::mv_color(s, par); });
        row("mv_color", "n=2000 m=64 random union", ts, tp,
            rs.coloring.assignment == rp.coloring.assignment);
    }

    {
        bcc::Graph g = bcc::complete_graph(1200);
        bcc::Coloring c;
        c.assignment.resize(1200);
        for (int v = 1; v <= 1200; ++v) c.assignment[v - 1] = {v};
        c.distinct_colors = 1200;
        bcc::ProperReport rs, rp;
        double ts = time_ms([&] { rs = bcc::verify_proper_serial(g, c); });
        double tp = time_ms([&] { rp = bcc::verify_proper(g, c); });
        row("verify_proper", "K_1200, 719400 edges", ts, tp, rs.proper == rp.proper);
    }

    return 0;
}
