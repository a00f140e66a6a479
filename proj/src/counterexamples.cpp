#include "dkg/estimates.hpp"

#include "dkg/norms.hpp"

#include <algorithm>

namespace dkg {

std::string family_name(Family f) {
    switch (f) {
        case Family::R1: return "R1";
        case Family::R2: return "R2";
        case Family::R3: return "R3";
        case Family::S: return "S";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "R1") return Family::R1;
    if (s == "R2") return Family::R2;
    if (s == "R3") return Family::R3;
    if (s == "S") return Family::S;
    throw ContractError("unknown family '" + s + "' (expected R1, R2, R3 or S)");
}

FamilySets family_sets(Family f, double L) {
    const double q = std::sqrt(L);
    switch (f) {
        case Family::R1:
            return {{L, L / 4, q, q / 4}, {2 * L, L / 2, 0.0, q / 2}, {-L, L / 4, q, q / 4}};
        case Family::R2:
            // A and C sit at height L^{1/2} so that the pair (eta, eta - xi)
            // keeps one orientation over the whole support.
            return {{0.0, q / 2, q, q / 2}, {L, q, 0.0, q}, {-L, q / 2, q, q / 2}};
        case Family::R3:
            return {{0.0, 0.5, 1.0, 0.5}, {L, 1.0, 0.0, 1.0}, {-L, 0.5, 1.0, 0.5}};
        case Family::S:
            return {{L, 0.25, 1.0, 0.25}, {L, 0.5, 0.0, 0.5}, {0.0, 0.25, 1.0, 0.25}};
    }
    throw ContractError("family_sets: bad family");
}

double family_delta(Family f, double s, double r) {
    switch (f) {
        case Family::R1: return 0.75 - r + 2.0 * s;
        case Family::R2: return 0.75 - r + 1.5 * s;
        case Family::R3: return 1.0 - r + s;
        case Family::S: return 0.5 + 2.0 * s;
    }
    return 0.0;
}

double family_boundary(Family f, double s) {
    switch (f) {
        case Family::R1: return 0.75 + 2.0 * s;
        case Family::R2: return 0.75 + 1.5 * s;
        case Family::R3: return 1.0 + s;
        case Family::S: break;
    }
    throw ContractError("family_boundary: S has no r boundary");
}

namespace {

constexpr double tol = 1e-9;

ColumnSupport rect_support(const Lattice3& lat, const Rect& R, std::function<Band(Vec2)> band) {
    ColumnSupport s;
    s.lat = lat;
    s.i1_min = int(std::ceil((R.c1 - R.h1) / lat.d1 - tol));
    s.i1_max = int(std::floor((R.c1 + R.h1) / lat.d1 + tol));
    s.i2_min = int(std::ceil((R.c2 - R.h2) / lat.d2 - tol));
    s.i2_max = int(std::floor((R.c2 + R.h2) / lat.d2 + tol));
    s.contains = [R](Vec2 p) { return R.contains(p); };
    s.band = std::move(band);
    return s;
}

double estimate_points(const ColumnSupport& s) {
    const double cols = double(s.i1_max - s.i1_min + 1) * double(s.i2_max - s.i2_min + 1);
    const Band b = s.band({(s.i1_min + s.i1_max) * 0.5 * s.lat.d1, (s.i2_min + s.i2_max) * 0.5 * s.lat.d2});
    return cols * ((b.hi - b.lo) / s.lat.d_tau + 1.0);
}

}  // namespace

Counterexample build_counterexample(Family f, double L, const CounterexampleConfig& cfg) {
    require(L >= 1.0 && std::isfinite(L), "build_counterexample: L must be >= 1");
    require(cfg.delta0 > 0.0 && cfg.delta0 <= 1.0, "build_counterexample: delta0 must lie in (0, 1]");
    Counterexample ce;
    ce.family = f;
    ce.L = L;
    ce.sets = family_sets(f, L);
    ce.sign1 = 1;
    ce.sign2 = f == Family::S ? -1 : 1;

    Lattice3 lat;
    const double q = std::sqrt(L);
    switch (f) {
        case Family::R1:
            lat = {cfg.thick_spacing, cfg.thick_spacing, q / cfg.short_cells};
            break;
        case Family::R2: {
            // eta1 spacing a multiple of the lambda spacing keeps the count of
            // lattice points across each band independent of L
            const double k = std::max(1.0, std::round(q / cfg.short_cells / cfg.thick_spacing));
            lat = {cfg.thick_spacing, k * cfg.thick_spacing, q / cfg.short_cells};
            break;
        }
        case Family::R3:
        case Family::S:
            lat = {cfg.unit_spacing, cfg.unit_spacing, cfg.unit_spacing};
            break;
    }

    const double d = cfg.delta0;
    ColumnSupport sa, sb, sc;
    if (f == Family::S) {
        sa = rect_support(lat, ce.sets.A, [d](Vec2 e) { return Band{-norm(e) - d / 2, -norm(e) + d / 2}; });
        // lambda' - |eta'| = (lambda + |eta|) - (tau + 2L) + (2L - |eta| - |eta'|), last term below 7/8 here
        sb = rect_support(lat, ce.sets.B, [d](Vec2 e) { return Band{norm(e) - d - 1.0, norm(e) + d + 1.0}; });
        sc = rect_support(lat, ce.sets.C, [d, L](Vec2) { return Band{-2 * L - d / 2, -2 * L + d / 2}; });
    } else {
        sa = rect_support(lat, ce.sets.A, [d](Vec2 e) { return Band{-e.x - d / 2, -e.x + d / 2}; });
        sb = rect_support(lat, ce.sets.B, [d](Vec2 e) { return Band{-e.x - d, -e.x + d}; });
        sc = rect_support(lat, ce.sets.C, [d](Vec2 e) { return Band{-e.x - d / 2, -e.x + d / 2}; });
    }
    const double need = estimate_points(sa) + estimate_points(sb) + estimate_points(sc);
    if (need > double(cfg.max_points))
        throw ContractError("build_counterexample: lattice needs about " + std::to_string(long(need)) +
                            " points, above max_points = " + std::to_string(cfg.max_points) +
                            "; coarsen the spacings or raise max_points");

    const int s1 = ce.sign1;
    const int s2 = ce.sign2;
    ce.psi = fill_spinor(build_support(sa), [s1](double, Vec2 e) { return eigenvector(s1, e); });
    ce.psi2 = fill_spinor(build_support(sb), [s2](double, Vec2 e) { return eigenvector(s2, e); });
    ce.out = build_support(sc);
    return ce;
}

Sides counterexample_sides(const Counterexample& ce, double s, double r, double eps, Exec exec) {
    ColumnScalarField out = ce.out;
    null_form_direct(ce.psi, ce.psi2, ce.sign1, ce.sign2, out, exec);
    Sides sd;
    sd.lhs = spacetime_norm(out, {SpacetimeKind::Hsb, r - 1.0, -0.5 + 2.0 * eps});
    sd.rhs = spacetime_norm(ce.psi, xsb(ce.sign1, s, 0.5 + eps)) * spacetime_norm(ce.psi2, xsb(ce.sign2, s, 0.5 + eps));
    if (!(sd.rhs > 0.0)) throw ContractError("counterexample_sides: right-hand side vanishes");
    sd.ratio = sd.lhs / sd.rhs;
    return sd;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "loglog_slope: need at least two points");
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        require(x[i] > 0.0 && y[i] > 0.0, "loglog_slope: values must be positive");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= double(x.size());
    my /= double(y.size());
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx <= 0.0) throw ContractError("loglog_slope: degenerate abscissae");
    return sxy / sxx;
}

ScalingReport fit_scaling(Family f, double s, double r, const std::vector<double>& Ls,
                          const CounterexampleConfig& cfg, double tolerance, Exec exec) {
    require(Ls.size() >= 3, "fit_scaling: need at least three values of L");
    for (size_t i = 2; i < Ls.size(); ++i)
        require(std::abs(Ls[i] / Ls[i - 1] - Ls[1] / Ls[0]) < 1e-9 * Ls[1] / Ls[0],
                "fit_scaling: L values must be geometric");
    ScalingReport rep;
    rep.family = f;
    rep.s = s;
    rep.r = r;
    std::vector<double> x, y;
    for (double L : Ls) {
        const Counterexample ce = build_counterexample(f, L, cfg);
        const Sides sd = counterexample_sides(ce, s, r, 0.0, exec);
        if (!(sd.ratio > 0.0)) throw ContractError("fit_scaling: zero ratio, degenerate fit");
        rep.points.push_back({L, sd.lhs, sd.rhs, sd.ratio});
        x.push_back(L);
        y.push_back(sd.ratio);
    }
    rep.fitted_slope = loglog_slope(x, y);
    rep.predicted_slope = -family_delta(f, s, r);
    rep.pass = std::abs(rep.fitted_slope - rep.predicted_slope) <= tolerance;
    return rep;
}

}  // namespace dkg
