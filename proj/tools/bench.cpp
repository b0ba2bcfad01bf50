// Compares the serial reference paths against the OpenMP ones on the
// two batch kernels: per-instance solving (the experiment loop) and
// minor-batch expansion. Outputs agree exactly; only wall time differs.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "osculant/equations.hpp"
#include "osculant/hookfam.hpp"
#include "osculant/sampler.hpp"
#include "osculant/solve.hpp"

using namespace osculant;
using combinat::Partition;
using exactalg::Rational;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Timing {
    double serial_ms = 0;
    double parallel_ms = 0;
};

Timing bench_instance_batch(int count) {
    combinat::SchubertProblemSpec p(3, 6,
                                    {{combinat::hook_complement(3, 6), 1}, {Partition({1}), 5}});
    exper::SeededRng rng(2024);
    std::vector<schubert::OsculatingInstance> instances;
    auto types = schubert::admissible_types(p);
    for (int i = 0; i < count; ++i)
        instances.push_back(exper::sample_instance(p, types[i % types.size()], rng));

    std::vector<long long> serial(instances.size()), parallel(instances.size());

    Timing t;
    double t0 = now_ms();
    for (size_t i = 0; i < instances.size(); ++i)
        serial[i] = groebner::solve_instance(instances[i], 6, groebner::SolveOptions{}).num_real;
    t.serial_ms = now_ms() - t0;

    t0 = now_ms();
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(instances.size()); ++i)
        parallel[static_cast<size_t>(i)] =
            groebner::solve_instance(instances[static_cast<size_t>(i)], 6,
                                     groebner::SolveOptions{})
                .num_real;
    t.parallel_ms = now_ms() - t0;

    if (serial != parallel) {
        std::cerr << "FATAL: serial and parallel instance batches disagree\n";
        std::exit(1);
    }
    return t;
}

Timing bench_minor_batch(int reps) {
    schubert::Chart chart = schubert::Chart::at_infinity(4, 8, Partition({2, 1}));
    Partition nu({2, 1, 1});
    auto t_point = schubert::OsculationPoint::real(Rational(3));

    Timing t;
    std::vector<exactalg::MultiPoly> a, b;
    double t0 = now_ms();
    for (int r = 0; r < reps; ++r) a = schubert::condition_equations(chart, nu, t_point, false);
    t.serial_ms = now_ms() - t0;
    t0 = now_ms();
    for (int r = 0; r < reps; ++r) b = schubert::condition_equations(chart, nu, t_point, true);
    t.parallel_ms = now_ms() - t0;
    if (a != b) {
        std::cerr << "FATAL: serial and parallel minor batches disagree\n";
        std::exit(1);
    }
    return t;
}

void report(const std::string& name, const Timing& t) {
    std::cout << name << ": serial " << t.serial_ms << " ms, openmp " << t.parallel_ms
              << " ms, speedup " << (t.parallel_ms > 0 ? t.serial_ms / t.parallel_ms : 0.0)
              << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 60;
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp; both columns are serial\n";
#endif
    report("hook-family instance batch (" + std::to_string(count) + " solves)",
           bench_instance_batch(count));
    report("minor batch, Gr(4,8) rank conditions (8 reps)", bench_minor_batch(8));
    return 0;
}
