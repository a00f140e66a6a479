#include "dkg/waves.hpp"

#include "dkg/duhamel.hpp"
#include "dkg/norms.hpp"

#include <algorithm>
#include <tuple>

namespace dkg {

SpectralField2 half_wave(const SpectralField2& f, int sign, double t) {
    require(sign == 1 || sign == -1, "half_wave: sign must be +1 or -1");
    SpectralField2 out = transform(f, Basis::Frequency);
    for (size_t i = 0; i < out.v.size(); ++i)
        out.v[i] *= std::exp(cplx(0.0, -sign * t * norm(out.grid.xi(i))));
    return transform(out, f.basis);
}

SpinorField2 half_wave(const SpinorField2& f, int sign, double t) {
    return {{half_wave(f.c[0], sign, t), half_wave(f.c[1], sign, t)}};
}

SpectralField3 free_wave_film(const SpectralField2& f, int sign, const GridSpec3& g) {
    require(g.spatial() == f.grid, "free_wave_film: spatial grid mismatch");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    SpectralField3 out = SpectralField3::zeros(g, Basis::Physical);
    const size_t m = f.grid.size();
    for (int it = 0; it < g.n_t; ++it) {
        const SpectralField2 slice = transform(half_wave(fh, sign, g.t(it)), Basis::Physical);
        std::copy(slice.v.begin(), slice.v.end(), out.v.begin() + long(it) * long(m));
    }
    return out;
}

WaveSolution wave_duhamel(const SpectralField2& phi0, const SpectralField2& phi1, const TimeSeries2& F) {
    require(phi0.grid == phi1.grid, "wave_duhamel: data grids differ");
    require(!F.slices.empty(), "wave_duhamel: empty source series");
    require(F.slices.size() == 1 || F.dt > 0.0, "wave_duhamel: dt must be positive");
    const GridSpec2& g = phi0.grid;
    const SpectralField2 a = transform(phi0, Basis::Frequency);
    const SpectralField2 b = transform(phi1, Basis::Frequency);
    std::vector<SpectralField2> Fh;
    Fh.reserve(F.slices.size());
    for (const auto& s : F.slices) {
        require(s.grid == g, "wave_duhamel: source grid differs from data grid");
        Fh.push_back(transform(s, Basis::Frequency));
    }
    const size_t nt = Fh.size();
    WaveSolution out;
    out.phi.dt = out.phi_t.dt = F.dt;
    out.phi.slices.assign(nt, SpectralField2::zeros(g, Basis::Frequency));
    out.phi_t.slices.assign(nt, SpectralField2::zeros(g, Basis::Frequency));
    for (size_t i = 0; i < g.size(); ++i) {
        WaveModeIntegrator w(norm(g.xi(i)), F.dt);
        for (size_t j = 0; j < nt; ++j) {
            if (j > 0) w.push(Fh[j - 1].v[i], Fh[j].v[i]);
            const auto val = w.value(a.v[i], b.v[i]);
            out.phi.slices[j].v[i] = val.phi;
            out.phi_t.slices[j].v[i] = val.phi_t;
        }
    }
    return out;
}

SpectralField2 dyadic_project(const SpectralField2& f, double lambda) {
    require(lambda > 0.0, "dyadic_project: lambda must be positive");
    SpectralField2 out = transform(f, Basis::Frequency);
    for (size_t i = 0; i < out.v.size(); ++i) {
        const double r = norm(out.grid.xi(i));
        if (!(r > lambda && r <= 2.0 * lambda)) out.v[i] = 0.0;
    }
    return transform(out, f.basis);
}

std::vector<double> dyadic_levels(const GridSpec2& g) {
    const double kmin = g.dk();
    const double kmax = std::sqrt(2.0) * (g.n / 2) * g.dk();
    std::vector<double> out;
    for (int j = int(std::floor(std::log2(kmin))) - 1; j <= int(std::ceil(std::log2(kmax))); ++j)
        out.push_back(std::ldexp(1.0, j));
    return out;
}

SpectralField2 square_project(const SpectralField2& f, double lambda, double mu, int j, int k) {
    require(lambda > 0.0 && mu > 0.0, "square_project: lambda and mu must be positive");
    SpectralField2 out = transform(f, Basis::Frequency);
    for (size_t i = 0; i < out.v.size(); ++i) {
        const Vec2 xi = out.grid.xi(i);
        const double r = norm(xi);
        const bool in_annulus = r > lambda && r <= 2.0 * lambda;
        const bool in_square = xi.x >= j * mu && xi.x < (j + 1) * mu && xi.y >= k * mu && xi.y < (k + 1) * mu;
        if (!(in_annulus && in_square)) out.v[i] = 0.0;
    }
    return transform(out, f.basis);
}

namespace {

struct Mode {
    int m1;
    int m2;
    cplx value;
};

std::vector<Mode> nonzero_modes(const SpectralField2& fh) {
    std::vector<Mode> out;
    const int n = fh.grid.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const cplx z = fh.v[fh.grid.index(a, b)];
            if (z != cplx(0.0)) out.push_back({signed_mode(a, n), signed_mode(b, n), z});
        }
    return out;
}

int wrap_index(int m, int n) { return m < 0 ? m + n : m; }

/// Per-axis signed mode range of the support.
std::array<int, 4> mode_extent(const std::vector<Mode>& modes) {
    std::array<int, 4> e{0, 0, 0, 0};  // min1, max1, min2, max2
    for (const auto& m : modes) {
        e[0] = std::min(e[0], m.m1);
        e[1] = std::max(e[1], m.m1);
        e[2] = std::min(e[2], m.m2);
        e[3] = std::max(e[3], m.m2);
    }
    return e;
}

}  // namespace

SpectralField2 hh_to_low(const SpectralField2& f, const SpectralField2& g, double c) {
    require(f.grid == g.grid, "hh_to_low: grids differ");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    const SpectralField2 gh = transform(g, Basis::Frequency);
    const auto A = nonzero_modes(fh);
    const auto B = nonzero_modes(gh);
    const int n = f.grid.n;
    const double dk = f.grid.dk();
    const double scale = dk * dk / (two_pi * two_pi);
    SpectralField2 out = SpectralField2::zeros(f.grid, Basis::Frequency);
    for (const auto& a : A)
        for (const auto& b : B) {
            const int m1 = a.m1 + b.m1;
            const int m2 = a.m2 + b.m2;
            if (m1 < -n / 2 || m1 >= n / 2 || m2 < -n / 2 || m2 >= n / 2)
                throw ContractError("hh_to_low: output frequency outside the grid");
            const double rx = dk * std::hypot(m1, m2);
            const double ra = dk * std::hypot(a.m1, a.m2);
            const double rb = dk * std::hypot(b.m1, b.m2);
            if (rx > c * (ra + rb)) continue;
            out.v[out.grid.index(wrap_index(m1, n), wrap_index(m2, n))] += scale * a.value * b.value;
        }
    return out;
}

RatioResult strichartz_ratio(const BilinearCase& c, const SpectralField2& f, const SpectralField2& g,
                             double T, int n_t, Notes* notes) {
    require(f.grid == g.grid, "strichartz_ratio: grids differ");
    require(T > 0.0 && n_t >= 1, "strichartz_ratio: need T > 0 and n_t >= 1");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    const SpectralField2 gh = transform(g, Basis::Frequency);
    const auto ef = mode_extent(nonzero_modes(fh));
    const auto eg = mode_extent(nonzero_modes(gh));
    const int half = f.grid.n / 2;
    if (ef[0] + eg[0] < -half || ef[1] + eg[1] > half - 1 || ef[2] + eg[2] < -half || ef[3] + eg[3] > half - 1)
        throw ContractError("strichartz_ratio: grid too coarse for the product; increase n");
    const Symbol2 low = homogeneous_power(-c.s3);
    const double dt = T / n_t;
    std::vector<double> a(static_cast<size_t>(n_t));
    for (int j = 0; j < n_t; ++j) {
        const double t = (j + 0.5) * dt;
        const SpectralField2 u = transform(half_wave(fh, c.sign1, t), Basis::Physical);
        const SpectralField2 v = transform(half_wave(gh, c.sign2, t), Basis::Physical);
        SpectralField2 w = u;
        for (size_t i = 0; i < w.v.size(); ++i) w.v[i] *= v.v[i];
        a[size_t(j)] = sobolev_norm(apply_multiplier(w, low, j == 0 ? notes : nullptr), 0.0);
    }
    RatioResult r;
    r.lhs = time_lebesgue(a, dt, c.q);
    r.rhs = sobolev_norm(fh, c.s1, true) * sobolev_norm(gh, c.s2, true);
    require(r.rhs > 0.0, "strichartz_ratio: data norms vanish");
    r.ratio = r.lhs / r.rhs;
    return r;
}

RatioResult improved_square_strichartz_ratio(const SpectralField2& f, double lambda, double mu, int j, int k,
                                             double q, int n_t, double T) {
    require(q >= 2.0, "improved_square_strichartz_ratio: q must be >= 2");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    const SpectralField2 proj = square_project(fh, lambda, mu, j, k);
    if (max_abs_diff(proj, fh) != 0.0)
        throw ContractError("improved_square_strichartz_ratio: data not supported in the annulus-square");
    const double dt = T / n_t;
    std::vector<double> a(static_cast<size_t>(n_t));
    for (int i = 0; i < n_t; ++i) {
        const double t = (i + 0.5) * dt;
        a[size_t(i)] = lebesgue_norm(transform(half_wave(fh, 1, t), Basis::Physical), 4.0);
    }
    RatioResult r;
    r.lhs = time_lebesgue(a, dt, q);
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    r.rhs = std::pow(mu, 0.5 - 2.0 * inv_q) * std::pow(lambda, inv_q) * sobolev_norm(fh, 0.0);
    require(r.rhs > 0.0, "improved_square_strichartz_ratio: zero data");
    r.ratio = r.lhs / r.rhs;
    return r;
}

RatioResult hh_low_ratio(const HHLowCase& c, const SpectralField2& f, const SpectralField2& g, double T,
                         Exec exec, Notes* notes) {
    require(f.grid == g.grid, "hh_low_ratio: grids differ");
    require(T > 0.0, "hh_low_ratio: T must be positive");
    const SpectralField2 fh = transform(f, Basis::Frequency);
    const SpectralField2 gh = transform(g, Basis::Frequency);
    const auto A = nonzero_modes(fh);
    const auto B = nonzero_modes(gh);
    const double dk = f.grid.dk();
    const double scale = dk * dk / (two_pi * two_pi);

    // (output m1, output m2, coefficient, frequency), grouped by output mode
    std::vector<std::tuple<int, int, cplx, double>> terms;
    for (const auto& a : A)
        for (const auto& b : B) {
            const int m1 = a.m1 + b.m1;
            const int m2 = a.m2 + b.m2;
            const double ra = dk * std::hypot(a.m1, a.m2);
            const double rb = dk * std::hypot(b.m1, b.m2);
            if (dk * std::hypot(m1, m2) > c.c * (ra + rb)) continue;
            terms.emplace_back(m1, m2, scale * a.value * b.value, c.sign1 * ra + c.sign2 * rb);
        }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    PairwiseGroups groups;
    std::vector<double> weight;
    bool zero_dropped = false;
    for (size_t i = 0; i < terms.size();) {
        const int m1 = std::get<0>(terms[i]);
        const int m2 = std::get<1>(terms[i]);
        const double r = dk * std::hypot(m1, m2);
        size_t e = i;
        while (e < terms.size() && std::get<0>(terms[e]) == m1 && std::get<1>(terms[e]) == m2) ++e;
        if (r == 0.0 && c.s3 != 0.0) {
            zero_dropped = true;
        } else {
            for (size_t k = i; k < e; ++k) groups.push(std::get<2>(terms[k]), std::get<3>(terms[k]));
            groups.close_group();
            weight.push_back(r == 0.0 ? 1.0 : std::pow(r, -2.0 * c.s3));
        }
        i = e;
    }
    if (zero_dropped && notes) notes->add("zero mode zeroed in hh_low_ratio output");
    const std::vector<double> energy = window_energy(groups, T, exec);
    double sum = 0.0;
    for (size_t k = 0; k < energy.size(); ++k) sum += weight[k] * energy[k];
    RatioResult r;
    r.lhs = std::sqrt(std::max(sum, 0.0) * dk * dk) / two_pi;
    r.rhs = sobolev_norm(fh, c.s1, true) * sobolev_norm(gh, c.s2, true);
    require(r.rhs > 0.0, "hh_low_ratio: data norms vanish");
    r.ratio = r.lhs / r.rhs;
    return r;
}

}  // namespace dkg
