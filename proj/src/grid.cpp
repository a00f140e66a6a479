#include "dkg/grid.hpp"

#include "dkg/fft.hpp"

#include <algorithm>

namespace dkg {

GridSpec2::GridSpec2(int n_, double box_) : n(n_), box(box_) {
    require(n >= 4 && n % 2 == 0, "GridSpec2: n must be even and >= 4");
    require(box > 0.0 && std::isfinite(box), "GridSpec2: box must be positive");
}

GridSpec3::GridSpec3(int n_t_, int n_x_, double box_t_, double box_x_)
    : n_t(n_t_), n_x(n_x_), box_t(box_t_), box_x(box_x_) {
    require(n_t >= 4 && n_t % 2 == 0, "GridSpec3: n_t must be even and >= 4");
    require(n_x >= 4 && n_x % 2 == 0, "GridSpec3: n_x must be even and >= 4");
    require(box_t > 0.0 && box_x > 0.0, "GridSpec3: boxes must be positive");
}

SpectralField2 SpectralField2::zeros(const GridSpec2& g, Basis b) {
    return {g, b, std::vector<cplx>(g.size())};
}

SpectralField3 SpectralField3::zeros(const GridSpec3& g, Basis b) {
    return {g, b, std::vector<cplx>(g.size())};
}

SpinorField2 SpinorField2::zeros(const GridSpec2& g, Basis b) {
    return {{SpectralField2::zeros(g, b), SpectralField2::zeros(g, b)}};
}

SpinorField3 SpinorField3::zeros(const GridSpec3& g, Basis b) {
    return {{SpectralField3::zeros(g, b), SpectralField3::zeros(g, b)}};
}

SpectralField2 transform(const SpectralField2& f, Basis target) {
    if (f.basis == target) return f;
    SpectralField2 out = f;
    const int n = f.grid.n;
    const double dx2 = f.grid.dx() * f.grid.dx();
    if (target == Basis::Frequency) {
        fft::dft2(out.v, n, n, -1);
        for (auto& z : out.v) z *= dx2;
    } else {
        fft::dft2(out.v, n, n, +1);
        const double scale = 1.0 / (double(n) * n * dx2);
        for (auto& z : out.v) z *= scale;
    }
    out.basis = target;
    return out;
}

SpectralField3 transform(const SpectralField3& f, Basis target) {
    if (f.basis == target) return f;
    SpectralField3 out = f;
    const auto& g = f.grid;
    const double cell = g.dt() * g.dx() * g.dx();
    if (target == Basis::Frequency) {
        fft::dft3(out.v, g.n_t, g.n_x, g.n_x, -1);
        for (auto& z : out.v) z *= cell;
    } else {
        fft::dft3(out.v, g.n_t, g.n_x, g.n_x, +1);
        const double scale = 1.0 / (double(g.size()) * cell);
        for (auto& z : out.v) z *= scale;
    }
    out.basis = target;
    return out;
}

SpinorField2 transform(const SpinorField2& f, Basis target) {
    return {{transform(f.c[0], target), transform(f.c[1], target)}};
}

SpinorField3 transform(const SpinorField3& f, Basis target) {
    return {{transform(f.c[0], target), transform(f.c[1], target)}};
}

namespace {

void check_compatible(const SpectralField2& a, const SpectralField2& b) {
    require(a.grid == b.grid, "field grids differ");
    require(a.basis == b.basis, "field bases differ");
}

}  // namespace

SpectralField2 operator+(const SpectralField2& a, const SpectralField2& b) {
    check_compatible(a, b);
    SpectralField2 out = a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    return out;
}

SpectralField2 operator-(const SpectralField2& a, const SpectralField2& b) {
    check_compatible(a, b);
    SpectralField2 out = a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

SpectralField2 operator*(cplx s, const SpectralField2& a) {
    SpectralField2 out = a;
    for (auto& z : out.v) z *= s;
    return out;
}

SpinorField2 operator+(const SpinorField2& a, const SpinorField2& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1]}};
}

SpinorField2 operator-(const SpinorField2& a, const SpinorField2& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1]}};
}

SpinorField2 operator*(cplx s, const SpinorField2& a) {
    return {{s * a.c[0], s * a.c[1]}};
}

double max_abs_diff(const SpectralField2& a, const SpectralField2& b) {
    check_compatible(a, b);
    double m = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

double max_abs_diff(const SpectralField3& a, const SpectralField3& b) {
    require(a.grid == b.grid && a.basis == b.basis, "field grids or bases differ");
    double m = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

Symbol2 japanese_power(double s) {
    return {[s](Vec2 xi) { return cplx(std::pow(1.0 + norm(xi), s)); }, ""};
}

Symbol2 homogeneous_power(double s) {
    Symbol2 sym;
    sym.fn = [s](Vec2 xi) {
        const double r = norm(xi);
        if (r == 0.0) return cplx(s == 0.0 ? 1.0 : 0.0);
        return cplx(std::pow(r, s));
    };
    if (s < 0.0) sym.zero_mode_note = "zero mode zeroed for |xi|^" + std::to_string(s);
    return sym;
}

SpectralField2 apply_multiplier(const SpectralField2& f, const Symbol2& sym, Notes* notes) {
    SpectralField2 out = transform(f, Basis::Frequency);
    for (size_t i = 0; i < out.v.size(); ++i) {
        const cplx m = sym.fn(out.grid.xi(i));
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
            throw NumericalError("multiplier symbol is non-finite on the lattice");
        out.v[i] *= m;
    }
    if (notes && !sym.zero_mode_note.empty()) notes->add(sym.zero_mode_note);
    return transform(out, f.basis);
}

SpectralField3 apply_multiplier(const SpectralField3& f, const Symbol3& sym, Notes* notes) {
    SpectralField3 out = transform(f, Basis::Frequency);
    const auto& g = out.grid;
    for (int it = 0; it < g.n_t; ++it)
        for (int a = 0; a < g.n_x; ++a)
            for (int b = 0; b < g.n_x; ++b) {
                const cplx m = sym.fn(g.tau(it), {g.freq(a), g.freq(b)});
                if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
                    throw NumericalError("multiplier symbol is non-finite on the lattice");
                out.v[g.index(it, a, b)] *= m;
            }
    if (notes && !sym.zero_mode_note.empty()) notes->add(sym.zero_mode_note);
    return transform(out, f.basis);
}

Weights weights_at(double tau, Vec2 xi, Vec2 eta, double lambda) {
    const double nxi = norm(xi);
    const double neta = norm(eta);
    const double ndiff = norm(eta - xi);
    return {
        std::abs(tau) - nxi,
        lambda + neta,
        lambda - tau + ndiff,
        lambda - tau - ndiff,
        nxi - std::abs(neta - ndiff),
        neta + ndiff - nxi,
    };
}

}  // namespace dkg
