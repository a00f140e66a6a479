// Serial reference against OpenMP kernels: wall time and agreement.

#include "dkg/estimates.hpp"
#include "dkg/experiments.hpp"
#include "dkg/norms.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace dkg;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void line(const char* name, double ts, double tp, double diff) {
    std::printf("%-30s serial %9.4f s  parallel %9.4f s  speedup %5.2f  max diff %.3e\n", name, ts, tp, ts / tp, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);

    {
        const Counterexample ce = build_counterexample(Family::R1, 32.0);
        ColumnScalarField a = ce.out, b = ce.out;
        const double ts = best_of(reps, [&] { null_form_direct(ce.psi, ce.psi2, 1, 1, a, Exec::Serial); });
        const double tp = best_of(reps, [&] { null_form_direct(ce.psi, ce.psi2, 1, 1, b, Exec::Parallel); });
        double diff = 0.0;
        for (size_t i = 0; i < a.values.size(); ++i) diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
        line("column correlation (R1 L=32)", ts, tp, diff);
    }
    {
        const GridSpec2 g(256, 256.0 / 32);
        const SpectralField2 f = sector_data(g, 32, 1.0 / 16, 0.0);
        const SpectralField2 h = sector_data(g, 32, 1.0 / 16, pi);
        const HHLowCase c{1, -1, 0.125, 0.125, 0.25, 0.25};
        RatioResult rs, rp;
        const double ts = best_of(reps, [&] { rs = hh_low_ratio(c, f, h, 1.0, Exec::Serial); });
        const double tp = best_of(reps, [&] { rp = hh_low_ratio(c, f, h, 1.0, Exec::Parallel); });
        line("window energy (hh, lambda=32)", ts, tp, std::abs(rs.ratio - rp.ratio));
    }
    {
        const GridSpec3 g(64, 64, 32.0, two_pi);
        SpectralField3 u = SpectralField3::zeros(g, Basis::Frequency);
        for (size_t i = 0; i < u.v.size(); ++i) u.v[i] = cplx(std::sin(0.37 * double(i)), std::cos(0.11 * double(i)));
        const NormSpec spec = xsb(1, 0.5, 0.5);
        double ns = 0.0, np = 0.0;
        const double ts = best_of(reps, [&] { ns = spacetime_norm(u, spec, Exec::Serial); });
        const double tp = best_of(reps, [&] { np = spacetime_norm(u, spec, Exec::Parallel); });
        line("weighted sum (64^3 X^{s,b})", ts, tp, std::abs(ns - np));
    }
    return 0;
}
