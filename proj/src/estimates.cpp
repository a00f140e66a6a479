#include "dkg/estimates.hpp"

#include "dkg/dirac.hpp"
#include "dkg/norms.hpp"

#include <algorithm>
#include <random>

namespace dkg {

namespace {

/// Applies Pi_sign(xi) to every space-time mode (zero at xi = 0), then beta if asked.
SpinorField3 project3(const SpinorField3& f, int sign, bool with_beta) {
    const SpinorField3 fh = transform(f, Basis::Frequency);
    SpinorField3 out = SpinorField3::zeros(f.grid(), Basis::Frequency);
    const DiracRep rep = pauli_rep();
    const auto& g = fh.grid();
    for (int a = 0; a < g.n_x; ++a)
        for (int b = 0; b < g.n_x; ++b) {
            const Vec2 xi{g.freq(a), g.freq(b)};
            if (xi.x == 0.0 && xi.y == 0.0) continue;
            Mat2 P = projector(rep, sign, xi);
            if (with_beta) P = rep.beta * P;
            for (int it = 0; it < g.n_t; ++it) {
                const size_t i = g.index(it, a, b);
                const Spinor z = P * Spinor{fh.c[0].v[i], fh.c[1].v[i]};
                out.c[0].v[i] = z[0];
                out.c[1].v[i] = z[1];
            }
        }
    return out;
}

/// (2 pi)^{-3} sum conj(v) u over the lattice: the L^2 pairing <u, v>.
cplx l2_pairing(const SpectralField3& u, const SpectralField3& v) {
    require(u.basis == Basis::Frequency && v.basis == Basis::Frequency, "l2_pairing: frequency basis expected");
    const auto& g = u.grid;
    cplx s(0.0);
    for (size_t i = 0; i < u.v.size(); ++i) s += u.v[i] * std::conj(v.v[i]);
    return s * g.dtau() * g.dk() * g.dk() / std::pow(two_pi, 3);
}

}  // namespace

SpectralField3 null_form(const SpinorField3& psi, const SpinorField3& psi2, int sign1, int sign2) {
    require(psi.grid() == psi2.grid(), "null_form: grid mismatch");
    const SpinorField3 a = transform(project3(psi, sign1, true), Basis::Physical);
    const SpinorField3 b = transform(project3(psi2, sign2, false), Basis::Physical);
    SpectralField3 n = SpectralField3::zeros(psi.grid(), Basis::Physical);
    for (size_t i = 0; i < n.v.size(); ++i)
        n.v[i] = a.c[0].v[i] * std::conj(b.c[0].v[i]) + a.c[1].v[i] * std::conj(b.c[1].v[i]);
    return transform(n, Basis::Frequency);
}

void null_form_direct(const ColumnSpinorField& psi, const ColumnSpinorField& psi2, int sign1, int sign2,
                      ColumnScalarField& out, Exec exec) {
    const DiracRep rep = pauli_rep();
    auto projected = [&rep](const ColumnSpinorField& f, int sign, bool with_beta) {
        std::vector<Spinor> vals(f.points());
        for (size_t c = 0; c < f.columns(); ++c) {
            const Vec2 eta = f.eta_of(c);
            if (f.len[c] == 0 || (eta.x == 0.0 && eta.y == 0.0)) continue;
            Mat2 P = projector(rep, sign, eta);
            if (with_beta) P = rep.beta * P;
            for (int k = 0; k < f.len[c]; ++k) vals[f.off[c] + k] = P * f.values[f.off[c] + k];
        }
        return f.with_values(std::move(vals));
    };
    const ColumnSpinorField a = projected(psi, sign1, true);
    const ColumnSpinorField b = projected(psi2, sign2, false);
    correlate_columns(a, b, out, exec);
    const double scale = out.lat.cell() / std::pow(two_pi, 3);
    for (auto& z : out.values) z *= scale;
}

Sides estimate_sides(const EstimateCase& c, const SpinorField3& psi, const SpinorField3& psi2) {
    require(c.eps >= 0.0, "estimate_sides: eps must be nonnegative");
    const SpectralField3 N = null_form(psi, psi2, c.sign1, c.sign2);
    Sides out;
    if (c.which == EstimateForm::B) {
        out.lhs = spacetime_norm(N, {SpacetimeKind::Hsb, c.r - 1.0, -0.5 + 2.0 * c.eps});
        out.rhs = spacetime_norm(psi, xsb(c.sign1, c.s, 0.5 + c.eps)) *
                  spacetime_norm(psi2, xsb(c.sign2, c.s, 0.5 + c.eps));
    } else {
        out.lhs = spacetime_norm(N, {SpacetimeKind::Hsb, -c.r, -0.5 - c.eps});
        out.rhs = spacetime_norm(psi, xsb(c.sign1, c.s, 0.5 + c.eps)) *
                  spacetime_norm(psi2, xsb(c.sign2, -c.s, 0.5 - 2.0 * c.eps));
    }
    if (!(out.rhs > 0.0)) throw ContractError("estimate_sides: right-hand side vanishes");
    out.ratio = out.lhs / out.rhs;
    return out;
}

DualCheck dual_form_check(const EstimateCase& c, const SpectralField3& phi, const SpinorField3& psi) {
    require(phi.grid == psi.grid(), "dual_form_check: grid mismatch");
    const SpectralField3 ph = transform(phi, Basis::Physical);
    const SpinorField3 a = transform(project3(psi, c.sign1, true), Basis::Physical);
    SpinorField3 prod = SpinorField3::zeros(psi.grid(), Basis::Physical);
    for (size_t i = 0; i < ph.v.size(); ++i) {
        prod.c[0].v[i] = ph.v[i] * a.c[0].v[i];
        prod.c[1].v[i] = ph.v[i] * a.c[1].v[i];
    }
    const SpinorField3 F = project3(prod, c.sign2, false);
    const NormSpec wF = xsb(c.sign2, c.s, -0.5 + 2.0 * c.eps);

    SpinorField3 rep = F;
    const auto& g = F.grid();
    for (int it = 0; it < g.n_t; ++it)
        for (int x = 0; x < g.n_x; ++x)
            for (int y = 0; y < g.n_x; ++y) {
                const double w = spacetime_weight(wF, g.tau(it), {g.freq(x), g.freq(y)});
                const size_t i = g.index(it, x, y);
                rep.c[0].v[i] *= w * w;
                rep.c[1].v[i] *= w * w;
            }

    DualCheck out{};
    const double nF = spacetime_norm(F, wF);
    const double nphi = spacetime_norm(phi, {SpacetimeKind::Hsb, c.r, 0.5 + c.eps});
    const double npsi = spacetime_norm(psi, xsb(c.sign1, c.s, 0.5 + c.eps));
    require(nphi > 0.0 && npsi > 0.0, "dual_form_check: zero data");
    out.direct_ratio = nF / (nphi * npsi);

    EstimateCase dual = c;
    dual.which = EstimateForm::A;
    out.dual_ratio = estimate_sides(dual, psi, rep).ratio;

    const cplx pf = l2_pairing(F.c[0], rep.c[0]) + l2_pairing(F.c[1], rep.c[1]);
    const SpectralField3 N = null_form(psi, rep, c.sign1, c.sign2);
    const SpectralField3 phih = transform(phi, Basis::Frequency);
    const cplx pn = l2_pairing(N, phih);
    out.pairing_field = pf.real();
    out.pairing_null = pn.real();
    return out;
}

RegionReport region_check(double s, double r) {
    struct C {
        const char* name;
        double margin;
    };
    const C cs[] = {
        {"s > -1/5", s + 0.2},
        {"r > 1/4 - s/2", r - (0.25 - 0.5 * s)},
        {"r > 1/4 + s/2", r - (0.25 + 0.5 * s)},
        {"r > s", r - s},
        {"r < 3/4 + 2s", 0.75 + 2.0 * s - r},
        {"r < 3/4 + 3s/2", 0.75 + 1.5 * s - r},
        {"r < 1 + s", 1.0 + s - r},
    };
    constexpr double tol = 1e-9;
    RegionReport out{RegionStatus::Inside, {}};
    bool outside = false, boundary = false;
    for (const auto& c : cs) {
        if (c.margin < -tol) {
            outside = true;
            out.violated.emplace_back(c.name);
        } else if (c.margin <= tol) {
            boundary = true;
            out.violated.emplace_back(c.name);
        }
    }
    out.status = outside ? RegionStatus::Outside : boundary ? RegionStatus::Boundary : RegionStatus::Inside;
    return out;
}

std::string region_name(RegionStatus s) {
    switch (s) {
        case RegionStatus::Inside: return "inside";
        case RegionStatus::Boundary: return "boundary";
        case RegionStatus::Outside: return "outside";
    }
    return "?";
}

WeightReport verify_weight_relations(long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::uniform_real_distribution<double> logr(0.0, std::log(1e3));
    auto random_vec = [&]() {
        const double r = std::exp(logr(rng));
        const double a = pi * U(rng);
        return Vec2{r * std::cos(a), r * std::sin(a)};
    };
    WeightReport rep;
    rep.theta_plus_min = rep.theta_minus_min = 1e300;
    rep.theta_plus_max = rep.theta_minus_max = 0.0;
    constexpr double tol = 1e-12;
    while (rep.samples < samples) {
        const Vec2 eta = random_vec();
        const Vec2 zeta = random_vec();  // eta - xi
        const Vec2 xi = eta - zeta;
        const double scale = std::max(norm(eta), norm(zeta));
        const double lambda = 2.0 * scale * U(rng);
        const double tau = 2.0 * scale * U(rng);
        const double ne = norm(eta), nz = norm(zeta), nx = norm(xi);
        if (ne < 1.0 || nz < 1.0) continue;
        ++rep.samples;
        const Weights w = weights_at(tau, xi, eta, lambda);
        const double m = std::min(ne, nz);
        const double slack = tol * (1.0 + scale);
        if (w.rho_plus > 2.0 * m + slack || w.rho_minus > 2.0 * m + slack) ++rep.rho_violations;
        if (w.rho_plus > std::abs(w.A) + std::abs(w.B) + std::abs(w.C_plus) + slack) ++rep.rho_violations;
        if (w.rho_minus > std::abs(w.A) + std::abs(w.B) + std::abs(w.C_minus) + slack) ++rep.rho_violations;
        if (w.rho_plus < -slack || w.rho_minus < -slack) ++rep.rho_violations;

        const double tp = angle_between(eta, zeta);
        const double tm = angle_between(eta, -zeta);
        // Comparability constants, skipped where both sides vanish to rounding.
        if (w.rho_plus > 1e-9 * nx && nx > 0.0) {
            const double c = tp * tp * ne * nz / (nx * w.rho_plus);
            rep.theta_plus_min = std::min(rep.theta_plus_min, c);
            rep.theta_plus_max = std::max(rep.theta_plus_max, c);
        }
        if (w.rho_minus > 1e-9 * (ne + nz)) {
            const double c = tm * tm * m / w.rho_minus;
            rep.theta_minus_min = std::min(rep.theta_minus_min, c);
            rep.theta_minus_max = std::max(rep.theta_minus_max, c);
        }
    }
    rep.ok = rep.rho_violations == 0 && rep.theta_plus_min >= 0.125 && rep.theta_plus_max <= 8.0 &&
             rep.theta_minus_min >= 0.125 && rep.theta_minus_max <= 8.0;
    return rep;
}

double cutoff_chi(double t) {
    const auto bump = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    return bump(2.0 - a) / (bump(2.0 - a) + bump(a - 1.0));
}

SpectralField3 time_cutoff(const SpectralField3& u) {
    SpectralField3 out = transform(u, Basis::Physical);
    const auto& g = out.grid;
    const size_t m = size_t(g.n_x) * g.n_x;
    for (int it = 0; it < g.n_t; ++it) {
        const double c = cutoff_chi(g.t(it));
        for (size_t i = 0; i < m; ++i) out.v[it * m + i] *= c;
    }
    return transform(out, u.basis);
}

SpinorField3 time_cutoff(const SpinorField3& psi) {
    return {{time_cutoff(psi.c[0]), time_cutoff(psi.c[1])}};
}

}  // namespace dkg
