#include "dkg/column_field.hpp"

namespace dkg {

ColumnScalarField build_support(const ColumnSupport& s) {
    require(s.lat.d_tau > 0 && s.lat.d1 > 0 && s.lat.d2 > 0, "build_support: spacings must be positive");
    require(s.i1_max >= s.i1_min && s.i2_max >= s.i2_min, "build_support: empty index box");
    constexpr double tol = 1e-9;
    ColumnScalarField f;
    f.lat = s.lat;
    f.i1_min = s.i1_min;
    f.i2_min = s.i2_min;
    f.n1 = s.i1_max - s.i1_min + 1;
    f.n2 = s.i2_max - s.i2_min + 1;
    const size_t ncol = size_t(f.n1) * f.n2;
    f.lo.assign(ncol, 0);
    f.len.assign(ncol, 0);
    f.off.assign(ncol, 0);
    size_t total = 0;
    for (size_t c = 0; c < ncol; ++c) {
        f.off[c] = total;
        const Vec2 eta = f.eta_of(c);
        if (!s.contains(eta)) continue;
        const Band b = s.band(eta);
        const long lo = long(std::ceil(b.lo / s.lat.d_tau - tol));
        const long hi = long(std::floor(b.hi / s.lat.d_tau + tol));
        if (hi < lo) continue;
        f.lo[c] = int(lo);
        f.len[c] = int(hi - lo + 1);
        total += size_t(f.len[c]);
    }
    f.values.assign(total, cplx(0.0));
    return f;
}

ColumnSpinorField fill_spinor(const ColumnScalarField& support,
                              const std::function<Spinor(double, Vec2)>& f) {
    std::vector<Spinor> vals(support.points());
    for (size_t c = 0; c < support.columns(); ++c) {
        const Vec2 eta = support.eta_of(c);
        for (int k = 0; k < support.len[c]; ++k)
            vals[support.off[c] + k] = f(support.tau_of(c, k), eta);
    }
    return support.with_values(std::move(vals));
}

}  // namespace dkg
