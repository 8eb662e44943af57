// Timing comparison between the serial reference kernels and their
// OpenMP counterparts on growing projective lines over Z/n. Results are
// checked for equality while timing, so a benchmark run doubles as a
// consistency check.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pline/graph.hpp"
#include "pline/kernels.hpp"
#include "pline/orbits.hpp"

using namespace pline;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class F> double best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const char* kernel, const std::string& instance, double serial_ms, double parallel_ms,
         bool equal) {
    std::printf("%-22s %-18s %10.2f %10.2f %8.2fx  %s\n", kernel, instance.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int threads = 0;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 2) threads = 2;
    int reps = 3;

    std::printf("serial reference vs OpenMP (%d threads), best of %d runs, times in ms\n\n", threads,
                reps);
    std::printf("%-22s %-18s %10s %10s %9s\n", "kernel", "instance", "serial", "parallel", "speedup");

    // pairwise distant tests + eccentricities on P(Z/n)
    for (std::uint64_t n : {210, 630, 1155}) {
        auto ring = ring_create_finite(RingSpec::zn(n));
        auto pts = enumerate_points(*ring);
        std::string inst = ring->name() + " (" + std::to_string(pts.size()) + " pts)";

        BitMatrix ser(0), par(0);
        double t_ser = best_of(reps, [&] { ser = adjacency_serial(*ring, pts); });
        double t_par = best_of(reps, [&] { par = adjacency(*ring, pts, threads); });
        row("adjacency", inst, t_ser, t_par, ser == par);

        std::vector<std::uint32_t> e_ser, e_par;
        double b_ser = best_of(reps, [&] { e_ser = eccentricities_serial(ser); });
        double b_par = best_of(reps, [&] { e_par = eccentricities(ser, threads); });
        row("eccentricities", inst, b_ser, b_par, e_ser == e_par);
    }

    // GL2 invertibility scan and pair classification on small rings
    for (auto spec : {RingSpec::matrix(RingSpec::zn(2)), RingSpec::zn(16)}) {
        auto ring = ring_create_finite(spec);
        std::string inst = ring->name();

        std::vector<std::uint8_t> t_ser_v, t_par_v;
        double t_ser = best_of(reps, [&] { t_ser_v = invertibility_table_serial(*ring); });
        double t_par = best_of(reps, [&] { t_par_v = invertibility_table(*ring, threads); });
        row("invertibility scan", inst, t_ser, t_par, t_ser_v == t_par_v);

        PairClasses c_ser, c_par;
        double c_ser_t = best_of(reps, [&] { c_ser = classify_pairs_serial(*ring); });
        double c_par_t = best_of(reps, [&] { c_par = classify_pairs(*ring, threads); });
        row("pair classification", inst, c_ser_t, c_par_t, c_ser == c_par);
    }
    return 0;
}
