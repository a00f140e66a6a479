#include "dkg/norms.hpp"

#include <algorithm>
#include <limits>

namespace dkg {

namespace {

const double inv_2pi_3_2 = 1.0 / std::pow(two_pi, 1.5);

double sobolev_sum(const SpectralField2& f, double s, bool homogeneous, Notes* notes) {
    require(!homogeneous || s > -1.0, "sobolev_norm: homogeneous norms need s > -1");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    double sum = 0.0;
    for (size_t i = 0; i < fh.v.size(); ++i) {
        const double r = norm(fh.grid.xi(i));
        double w;
        if (homogeneous) {
            if (r == 0.0) {
                w = s == 0.0 ? 1.0 : 0.0;
            } else {
                w = std::pow(r, s);
            }
        } else {
            w = std::pow(1.0 + r, s);
        }
        sum += w * w * std::norm(fh.v[i]);
    }
    if (homogeneous && s < 0.0 && notes) notes->add("zero mode zeroed in homogeneous norm");
    const double dk = fh.grid.dk();
    return sum * dk * dk;
}

}  // namespace

double sobolev_norm(const SpectralField2& f, double s, bool homogeneous, Notes* notes) {
    return std::sqrt(sobolev_sum(f, s, homogeneous, notes)) / two_pi;
}

double sobolev_norm(const SpinorField2& f, double s, bool homogeneous, Notes* notes) {
    return std::sqrt(sobolev_sum(f.c[0], s, homogeneous, notes) +
                     sobolev_sum(f.c[1], s, homogeneous, nullptr)) / two_pi;
}

NormSpec xsb(int sign, double s, double b) {
    require(sign == 1 || sign == -1, "xsb: sign must be +1 or -1");
    return {sign > 0 ? SpacetimeKind::XsbPlus : SpacetimeKind::XsbMinus, s, b};
}

double spacetime_weight(const NormSpec& spec, double tau, Vec2 xi) {
    const double r = norm(xi);
    switch (spec.kind) {
        case SpacetimeKind::XsbPlus:
            return std::pow(1.0 + r, spec.s) * std::pow(japanese(tau + r), spec.b);
        case SpacetimeKind::XsbMinus:
            return std::pow(1.0 + r, spec.s) * std::pow(japanese(tau - r), spec.b);
        case SpacetimeKind::Hsb:
            return std::pow(1.0 + r, spec.s) * std::pow(japanese(std::abs(tau) - r), spec.b);
        case SpacetimeKind::HsbCurly:
            throw ContractError("spacetime_weight: the curly norm is a sum of two norms, not a single weight");
    }
    return 0.0;
}

namespace {

/// Weight of the d_t u term of the curly norm: <xi>^{s-1} |tau| <|tau| - |xi|>^b.
double curly_time_weight(const NormSpec& spec, double tau, Vec2 xi) {
    return std::abs(tau) * spacetime_weight({SpacetimeKind::Hsb, spec.s - 1.0, spec.b}, tau, xi);
}

template <class SumFn>
double combine(const NormSpec& spec, SumFn&& sum) {
    if (spec.kind != SpacetimeKind::HsbCurly)
        return std::sqrt(sum([&spec](double tau, Vec2 xi) { return spacetime_weight(spec, tau, xi); }));
    const NormSpec h{SpacetimeKind::Hsb, spec.s, spec.b};
    return std::sqrt(sum([&h](double tau, Vec2 xi) { return spacetime_weight(h, tau, xi); })) +
           std::sqrt(sum([&spec](double tau, Vec2 xi) { return curly_time_weight(spec, tau, xi); }));
}

}  // namespace

double spacetime_norm(const SpectralField3& u, const NormSpec& spec, Exec exec) {
    const SpectralField3 uh = transform(u, Basis::Frequency);
    const auto& g = uh.grid;
    const double cell = g.dtau() * g.dk() * g.dk();
    return combine(spec, [&](auto&& w) { return weighted_sum_sq(uh, w, exec) * cell; }) * inv_2pi_3_2;
}

double spacetime_norm(const SpinorField3& u, const NormSpec& spec, Exec exec) {
    const SpinorField3 uh = transform(u, Basis::Frequency);
    const auto& g = uh.grid();
    const double cell = g.dtau() * g.dk() * g.dk();
    return combine(spec, [&](auto&& w) {
        return (weighted_sum_sq(uh.c[0], w, exec) + weighted_sum_sq(uh.c[1], w, exec)) * cell;
    }) * inv_2pi_3_2;
}

double curly_product_form(const SpectralField3& u, double s, double b) {
    const SpectralField3 uh = transform(u, Basis::Frequency);
    const auto& g = uh.grid;
    const double sum = weighted_sum_sq(uh, [s, b](double tau, Vec2 xi) {
        const double r = norm(xi);
        return std::pow(1.0 + r, s - 1.0) * (1.0 + std::abs(tau) + r) *
               std::pow(japanese(std::abs(tau) - r), b);
    });
    return std::sqrt(sum * g.dtau() * g.dk() * g.dk()) * inv_2pi_3_2;
}

double spacetime_norm(const ColumnSpinorField& u, const NormSpec& spec) {
    return combine(spec, [&u](auto&& w) {
        double sum = 0.0;
        for (size_t c = 0; c < u.columns(); ++c) {
            const Vec2 eta = u.eta_of(c);
            for (int k = 0; k < u.len[c]; ++k) {
                const double wt = w(u.tau_of(c, k), eta);
                const Spinor& z = u.values[u.off[c] + k];
                sum += wt * wt * (std::norm(z[0]) + std::norm(z[1]));
            }
        }
        return sum * u.lat.cell();
    }) * inv_2pi_3_2;
}

double spacetime_norm(const ColumnScalarField& u, const NormSpec& spec) {
    return combine(spec, [&u](auto&& w) {
        double sum = 0.0;
        for (size_t c = 0; c < u.columns(); ++c) {
            const Vec2 eta = u.eta_of(c);
            for (int k = 0; k < u.len[c]; ++k) {
                const double wt = w(u.tau_of(c, k), eta);
                sum += wt * wt * std::norm(u.values[u.off[c] + k]);
            }
        }
        return sum * u.lat.cell();
    }) * inv_2pi_3_2;
}

double lebesgue_norm(const SpectralField2& f, double r) {
    require(f.basis == Basis::Physical, "lebesgue_norm: field must be in physical basis");
    require(r >= 1.0, "lebesgue_norm: r must be >= 1");
    if (std::isinf(r)) {
        double m = 0.0;
        for (const auto& z : f.v) m = std::max(m, std::abs(z));
        return m;
    }
    double s = 0.0;
    for (const auto& z : f.v) s += std::pow(std::abs(z), r);
    const double dx = f.grid.dx();
    return std::pow(s * dx * dx, 1.0 / r);
}

double time_lebesgue(const std::vector<double>& a, double dt, double q) {
    require(q >= 1.0, "time_lebesgue: q must be >= 1");
    if (std::isinf(q)) return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
    double s = 0.0;
    for (double x : a) s += std::pow(x, q);
    return std::pow(s * dt, 1.0 / q);
}

double mixed_norm(const SpectralField3& u, double q, double r) {
    require(u.basis == Basis::Physical, "mixed_norm: field must be in physical basis");
    const auto& g = u.grid;
    const GridSpec2 gs = g.spatial();
    std::vector<double> a(static_cast<size_t>(g.n_t));
    SpectralField2 slice = SpectralField2::zeros(gs, Basis::Physical);
    for (int it = 0; it < g.n_t; ++it) {
        std::copy_n(u.v.begin() + long(it) * long(gs.size()), gs.size(), slice.v.begin());
        a[size_t(it)] = lebesgue_norm(slice, r);
    }
    return time_lebesgue(a, g.dt(), q);
}

}  // namespace dkg
