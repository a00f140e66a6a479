#include "dkg/kernels.hpp"

#include <algorithm>

namespace dkg {

namespace {

cplx correlate_one(const ColumnSpinorField& a, const ColumnSpinorField& b, int it, int j1, int j2) {
    cplx acc(0.0);
    for (size_t ca = 0; ca < a.columns(); ++ca) {
        const int na = a.len[ca];
        if (na == 0) continue;
        const long cb = b.column_at(a.i1_of(ca) - j1, a.i2_of(ca) - j2);
        if (cb < 0 || b.len[cb] == 0) continue;
        // lambda index l in a pairs with l - it in b
        const int lo = std::max(a.lo[ca], b.lo[cb] + it);
        const int hi = std::min(a.lo[ca] + na, b.lo[cb] + b.len[cb] + it);
        if (hi <= lo) continue;
        const Spinor* pa = a.values.data() + a.off[ca] + (lo - a.lo[ca]);
        const Spinor* pb = b.values.data() + b.off[cb] + (lo - it - b.lo[cb]);
        for (int l = 0; l < hi - lo; ++l) acc += inner(pa[l], pb[l]);
    }
    return acc;
}

void correlate_column(const ColumnSpinorField& a, const ColumnSpinorField& b,
                      ColumnScalarField& out, size_t c) {
    const int j1 = out.i1_of(c);
    const int j2 = out.i2_of(c);
    for (int k = 0; k < out.len[c]; ++k)
        out.values[out.off[c] + k] = correlate_one(a, b, out.lo[c] + k, j1, j2);
}

double group_energy(const PairwiseGroups& g, size_t k, double T) {
    const size_t b = g.offsets[k];
    const size_t e = g.offsets[k + 1];
    double diag = 0.0;
    cplx off(0.0);
    for (size_t i = b; i < e; ++i) {
        diag += std::norm(g.coeff[i]);
        for (size_t j = i + 1; j < e; ++j)
            off += g.coeff[i] * std::conj(g.coeff[j]) * window_kernel(g.omega[i] - g.omega[j], T);
    }
    return diag * T + 2.0 * off.real();
}

}  // namespace

void correlate_columns(const ColumnSpinorField& a, const ColumnSpinorField& b,
                       ColumnScalarField& out, Exec exec) {
    require(a.lat == b.lat && a.lat == out.lat, "correlate_columns: lattices differ");
    const long ncol = long(out.columns());
    if (exec == Exec::Serial) {
        for (long c = 0; c < ncol; ++c) correlate_column(a, b, out, size_t(c));
        return;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (long c = 0; c < ncol; ++c) correlate_column(a, b, out, size_t(c));
}

cplx window_kernel(double d, double T) {
    const double x = d * T;
    if (std::abs(x) < 1e-4) {
        // T * (1 - i x/2 - x^2/6 + i x^3/24)
        return T * cplx(1.0 - x * x / 6.0, -x / 2.0 + x * x * x / 24.0);
    }
    return (1.0 - std::exp(cplx(0.0, -x))) / cplx(0.0, d);
}

std::vector<double> window_energy(const PairwiseGroups& g, double T, Exec exec) {
    const long n = long(g.groups());
    std::vector<double> out(size_t(n), 0.0);
    if (exec == Exec::Serial) {
        for (long k = 0; k < n; ++k) out[k] = group_energy(g, size_t(k), T);
        return out;
    }
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < n; ++k) out[k] = group_energy(g, size_t(k), T);
    return out;
}

double weighted_sum_sq(const SpectralField3& u, const std::function<double(double, Vec2)>& w,
                       Exec exec) {
    require(u.basis == Basis::Frequency, "weighted_sum_sq: field must be in frequency basis");
    const auto& g = u.grid;
    std::vector<double> partial(size_t(g.n_t), 0.0);
    auto slice = [&](int it) {
        const double tau = g.tau(it);
        double s = 0.0;
        for (int a = 0; a < g.n_x; ++a)
            for (int b = 0; b < g.n_x; ++b) {
                const double wt = w(tau, {g.freq(a), g.freq(b)});
                s += wt * wt * std::norm(u.v[g.index(it, a, b)]);
            }
        partial[size_t(it)] = s;
    };
    if (exec == Exec::Serial) {
        for (int it = 0; it < g.n_t; ++it) slice(it);
    } else {
#pragma omp parallel for schedule(static)
        for (int it = 0; it < g.n_t; ++it) slice(it);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace dkg
