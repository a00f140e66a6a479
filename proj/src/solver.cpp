#include "dkg/solver.hpp"

#include "dkg/duhamel.hpp"
#include "dkg/estimates.hpp"
#include "dkg/norms.hpp"
#include "dkg/waves.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

namespace dkg {

namespace {

bool finite(const SpectralField2& f) {
    for (const auto& z : f.v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool finite(const DKGState& s) {
    return finite(s.psi_plus.c[0]) && finite(s.psi_plus.c[1]) && finite(s.psi_minus.c[0]) &&
           finite(s.psi_minus.c[1]) && finite(s.phi) && finite(s.phi_t);
}

template <class F>
void for_each_field(DKGState& s, F&& f) {
    f(s.psi_plus.c[0]);
    f(s.psi_plus.c[1]);
    f(s.psi_minus.c[0]);
    f(s.psi_minus.c[1]);
    f(s.phi);
    f(s.phi_t);
}

template <class F>
void for_each_pair(DKGState& y, const DKGState& x, F&& f) {
    f(y.psi_plus.c[0], x.psi_plus.c[0]);
    f(y.psi_plus.c[1], x.psi_plus.c[1]);
    f(y.psi_minus.c[0], x.psi_minus.c[0]);
    f(y.psi_minus.c[1], x.psi_minus.c[1]);
    f(y.phi, x.phi);
    f(y.phi_t, x.phi_t);
}

/// y + a x
DKGState axpy(const DKGState& y, double a, const DKGState& x) {
    DKGState out = y;
    for_each_pair(out, x, [a](SpectralField2& u, const SpectralField2& v) {
        for (size_t i = 0; i < u.v.size(); ++i) u.v[i] += a * v.v[i];
    });
    return out;
}

/// Exact free flow over time h.
DKGState linear_flow(const DKGState& s, double h) {
    DKGState out = s;
    const GridSpec2& g = s.grid();
    for (size_t i = 0; i < g.size(); ++i) {
        const double k = norm(g.xi(i));
        const cplx e = std::exp(cplx(0.0, -h * k));
        out.psi_plus.c[0].v[i] *= e;
        out.psi_plus.c[1].v[i] *= e;
        out.psi_minus.c[0].v[i] *= std::conj(e);
        out.psi_minus.c[1].v[i] *= std::conj(e);
        const cplx p = s.phi.v[i];
        const cplx q = s.phi_t.v[i];
        const double c = std::cos(k * h);
        const double sn = std::sin(k * h);
        const double sinc = k == 0.0 ? h : sn / k;
        out.phi.v[i] = c * p + sinc * q;
        out.phi_t.v[i] = -k * sn * p + c * q;
    }
    out.time = s.time + h;
    return out;
}

/// Interaction-picture right-hand side: (i rhs_+, i rhs_-, 0, -rhs_phi).
DKGState nonlinear_rate(const DKGState& s, bool dealiased) {
    const NonlinearTerms nt = nonlinearity(s, dealiased);
    DKGState d = DKGState::zeros(s.grid());
    const cplx I(0.0, 1.0);
    for (int c = 0; c < 2; ++c) {
        d.psi_plus.c[c] = I * nt.rhs_plus.c[c];
        d.psi_minus.c[c] = I * nt.rhs_minus.c[c];
    }
    d.phi_t = cplx(-1.0) * nt.rhs_phi;
    return d;
}

double psi_hs(const DKGState& s, double sv) { return sobolev_norm(s.psi(), sv); }

double phi_hr(const DKGState& s, double r) {
    return std::hypot(sobolev_norm(s.phi, r), sobolev_norm(s.phi_t, r - 1.0));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double mode_phase(std::uint64_t seed, int m1, int m2) {
    const std::uint64_t key = splitmix64(seed) ^ splitmix64((std::uint64_t(std::uint32_t(m1)) << 32) |
                                                            std::uint32_t(m2));
    const std::uint64_t h = splitmix64(key);
    return two_pi * double(h >> 11) * 0x1.0p-53;
}

/// Copies modes of f into a grid with the same box and n_out >= n.
SpectralField2 embed(const SpectralField2& f, int n_out) {
    const SpectralField2 fh = transform(f, Basis::Frequency);
    const int n = f.grid.n;
    SpectralField2 out = SpectralField2::zeros(GridSpec2(n_out, f.grid.box), Basis::Frequency);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int m1 = signed_mode(a, n);
            const int m2 = signed_mode(b, n);
            out.v[out.grid.index(m1 < 0 ? m1 + n_out : m1, m2 < 0 ? m2 + n_out : m2)] = fh.v[fh.grid.index(a, b)];
        }
    return out;
}

}  // namespace

DKGState DKGState::zeros(const GridSpec2& g) {
    return {SpinorField2::zeros(g, Basis::Frequency), SpinorField2::zeros(g, Basis::Frequency),
            SpectralField2::zeros(g, Basis::Frequency), SpectralField2::zeros(g, Basis::Frequency), 0.0};
}

SpinorField2 project(const SpinorField2& f, int sign, const DiracRep& rep) {
    const SpinorField2 fh = transform(f, Basis::Frequency);
    SpinorField2 out = SpinorField2::zeros(f.grid(), Basis::Frequency);
    for (size_t i = 0; i < fh.grid().size(); ++i) {
        const Vec2 xi = fh.grid().xi(i);
        if (xi.x == 0.0 && xi.y == 0.0) continue;
        const Spinor z = projector(rep, sign, xi) * Spinor{fh.c[0].v[i], fh.c[1].v[i]};
        out.c[0].v[i] = z[0];
        out.c[1].v[i] = z[1];
    }
    return out;
}

void dealias(SpectralField2& f) {
    require(f.basis == Basis::Frequency, "dealias: field must be in frequency basis");
    const int n = f.grid.n;
    const int cut = n / 3;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (std::abs(signed_mode(a, n)) > cut || std::abs(signed_mode(b, n)) > cut)
                f.v[f.grid.index(a, b)] = 0.0;
}

void dealias(SpinorField2& f) {
    dealias(f.c[0]);
    dealias(f.c[1]);
}

DKGState initial_state(const SpinorField2& psi0, const SpectralField2& phi0, const SpectralField2& phi1,
                       bool dealiased) {
    require(psi0.grid() == phi0.grid && phi0.grid == phi1.grid, "initial_state: grids differ");
    DKGState s;
    SpinorField2 p = transform(psi0, Basis::Frequency);
    s.phi = transform(phi0, Basis::Frequency);
    s.phi_t = transform(phi1, Basis::Frequency);
    if (dealiased) {
        dealias(p);
        dealias(s.phi);
        dealias(s.phi_t);
    }
    s.psi_plus = project(p, 1);
    s.psi_minus = project(p, -1);
    s.time = 0.0;
    return s;
}

NonlinearTerms nonlinearity(const SpinorField2& psi, const SpectralField2& phi, bool dealiased) {
    require(psi.grid() == phi.grid, "nonlinearity: grids differ");
    const SpinorField2 p = transform(psi, Basis::Physical);
    const SpectralField2 f = transform(phi, Basis::Physical);
    SpinorField2 fb = SpinorField2::zeros(phi.grid, Basis::Physical);
    SpectralField2 rho = SpectralField2::zeros(phi.grid, Basis::Physical);
    for (size_t i = 0; i < f.v.size(); ++i) {
        const double ph = f.v[i].real();
        fb.c[0].v[i] = ph * p.c[0].v[i];
        fb.c[1].v[i] = -ph * p.c[1].v[i];
        rho.v[i] = -(std::norm(p.c[0].v[i]) - std::norm(p.c[1].v[i]));
    }
    SpinorField2 fbh = transform(fb, Basis::Frequency);
    SpectralField2 rhs_phi = transform(rho, Basis::Frequency);
    if (dealiased) {
        dealias(fbh);
        dealias(rhs_phi);
    }
    return {cplx(-1.0) * project(fbh, 1), cplx(-1.0) * project(fbh, -1), rhs_phi};
}

NonlinearTerms nonlinearity(const DKGState& s, bool dealiased) {
    return nonlinearity(s.psi(), s.phi, dealiased);
}

DKGState step(const DKGState& y, double h, bool nonlinear, bool dealiased) {
    if (!nonlinear) return linear_flow(y, h);
    const DKGState k1 = nonlinear_rate(y, dealiased);
    const DKGState k2 = nonlinear_rate(linear_flow(axpy(y, 0.5 * h, k1), 0.5 * h), dealiased);
    const DKGState yh = linear_flow(y, 0.5 * h);
    const DKGState k3 = nonlinear_rate(axpy(yh, 0.5 * h, k2), dealiased);
    const DKGState k4 = nonlinear_rate(axpy(linear_flow(y, h), h, linear_flow(k3, 0.5 * h)), dealiased);
    DKGState out = linear_flow(axpy(y, h / 6.0, k1), h);
    DKGState mid = axpy(k2, 1.0, k3);
    mid = linear_flow(mid, 0.5 * h);
    out = axpy(out, h / 3.0, mid);
    out = axpy(out, h / 6.0, k4);
    out.time = y.time + h;
    if (!finite(out))
        throw NumericalError("non-finite state at t = " + std::to_string(out.time) + " (blowup or instability)");
    return out;
}

double charge(const SpinorField2& psi) { return std::pow(sobolev_norm(psi, 0.0), 2); }

double charge(const DKGState& s) { return charge(s.psi()); }

Trajectory solve(const DKGState& initial, const SolverConfig& config, double sv, double r) {
    require(config.mass_dirac == 0.0 && config.mass_field == 0.0, "solve: only the massless system is supported");
    require(config.dt != 0.0 && std::isfinite(config.dt), "solve: dt must be nonzero");
    require(config.T * config.dt > 0.0, "solve: T and dt must have the same sign");
    require(config.record_every >= 1, "solve: record_every must be >= 1");
    const double ratio = config.T / config.dt;
    const long steps = std::lround(ratio);
    require(steps >= 1 && std::abs(ratio - double(steps)) < 1e-9 * std::max(1.0, ratio),
            "solve: T must be an integer multiple of dt");

    Trajectory tr;
    const GridSpec2& g = initial.grid();
    const double kmax = std::sqrt(2.0) * (g.n / 2) * g.dk();
    if (std::abs(config.dt) > 0.5 / kmax)
        tr.notes.add("warning: |dt| exceeds 0.5/max|xi|; linear phases are exact, accuracy relies on smooth data");
    if (!config.dealias) tr.notes.add("dealiasing disabled");

    DKGState s = initial;
    auto record = [&](const DKGState& st) {
        tr.rows.push_back({st.time, charge(st), psi_hs(st, sv), phi_hr(st, r)});
        tr.states.push_back(st);
    };
    record(s);
    for (long k = 1; k <= steps; ++k) {
        s = step(s, config.dt, config.nonlinear, config.dealias);
        if (k % config.record_every == 0 || k == steps) record(s);
    }
    return tr;
}

PicardResult picard_iterates(const DKGState& initial, const PicardConfig& cfg) {
    require(cfg.depth >= 1, "picard_iterates: depth must be >= 1");
    require(cfg.T > 0.0 && cfg.intervals >= 1, "picard_iterates: need T > 0 and intervals >= 1");
    const GridSpec2& g = initial.grid();
    const int nn = cfg.intervals + 1;
    const double h = cfg.T / cfg.intervals;
    PicardResult res;

    PicardIterate free;
    for (int k = 0; k < nn; ++k) free.nodes.push_back(linear_flow(initial, k * h));
    res.iterates.push_back(std::move(free));

    for (int j = 0; j < cfg.depth; ++j) {
        const PicardIterate& prev = res.iterates.back();
        std::vector<NonlinearTerms> src;
        src.reserve(size_t(nn));
        for (const auto& st : prev.nodes) src.push_back(nonlinearity(st, cfg.dealias));

        PicardIterate next;
        next.nodes.assign(size_t(nn), DKGState::zeros(g));
        const cplx I(0.0, 1.0);
        for (size_t i = 0; i < g.size(); ++i) {
            const double kk = norm(g.xi(i));
            for (int c = 0; c < 2; ++c) {
                cplx jp(0.0), jm(0.0);
                for (int k = 0; k < nn; ++k) {
                    if (k > 0) {
                        jp += segment_integral(-kk, (k - 1) * h, h, I * src[k - 1].rhs_plus.c[c].v[i],
                                               I * src[k].rhs_plus.c[c].v[i]);
                        jm += segment_integral(kk, (k - 1) * h, h, I * src[k - 1].rhs_minus.c[c].v[i],
                                               I * src[k].rhs_minus.c[c].v[i]);
                    }
                    const cplx e = std::exp(cplx(0.0, -kk * k * h));
                    next.nodes[k].psi_plus.c[c].v[i] = e * (initial.psi_plus.c[c].v[i] + jp);
                    next.nodes[k].psi_minus.c[c].v[i] = std::conj(e) * (initial.psi_minus.c[c].v[i] + jm);
                }
            }
            WaveModeIntegrator w(kk, h);
            for (int k = 0; k < nn; ++k) {
                if (k > 0) w.push(src[k - 1].rhs_phi.v[i], src[k].rhs_phi.v[i]);
                const auto val = w.value(initial.phi.v[i], initial.phi_t.v[i]);
                next.nodes[k].phi.v[i] = val.phi;
                next.nodes[k].phi_t.v[i] = val.phi_t;
            }
        }
        bool ok = true;
        for (int k = 0; k < nn; ++k) {
            next.nodes[k].time = k * h;
            ok = ok && finite(next.nodes[k]);
        }
        if (!ok) {
            res.diverged_at = j + 1;
            break;
        }
        double d = 0.0;
        for (int k = 0; k < nn; ++k)
            d = std::max(d, sobolev_norm(next.nodes[k].psi() - prev.nodes[k].psi(), cfg.s) +
                                std::hypot(sobolev_norm(next.nodes[k].phi - prev.nodes[k].phi, cfg.r),
                                           sobolev_norm(next.nodes[k].phi_t - prev.nodes[k].phi_t, cfg.r - 1.0)));
        res.diffs.push_back(d);
        res.iterates.push_back(std::move(next));
    }
    for (size_t j = 0; j + 1 < res.diffs.size(); ++j)
        res.ratios.push_back(res.diffs[j] > 0.0 ? res.diffs[j + 1] / res.diffs[j] : 0.0);
    return res;
}

double iterate_gain(double t) { return t * cutoff_chi(t); }

std::vector<double> first_iterate_regularity(const SpinorField2& psi0, const std::vector<double>& sigmas,
                                             double t, const IterateConfig& cfg) {
    require(t > 0.0, "first_iterate_regularity: t must be positive");
    const GridSpec2& g0 = psi0.grid();
    const int n = cfg.pad ? 2 * g0.n : g0.n;
    const SpinorField2 p{{embed(psi0.c[0], n), embed(psi0.c[1], n)}};
    const SpinorField2 pp = project(p, 1);
    const SpinorField2 pm = project(p, -1);
    const GridSpec2& g = p.grid();
    const double kmax = std::sqrt(2.0) * (g0.n / 2) * g0.dk();
    const int samples = cfg.samples > 0 ? cfg.samples : std::max(16, int(std::ceil(32.0 * kmax * t)));
    const double h = t / samples;

    std::vector<WaveModeIntegrator> modes;
    modes.reserve(g.size());
    for (size_t i = 0; i < g.size(); ++i) modes.emplace_back(norm(g.xi(i)), h);

    auto source = [&](double s) {
        const SpinorField2 psi = transform(half_wave(pp, 1, s) + half_wave(pm, -1, s), Basis::Physical);
        SpectralField2 f = SpectralField2::zeros(g, Basis::Physical);
        const double gs = iterate_gain(s);
        for (size_t i = 0; i < f.v.size(); ++i)
            f.v[i] = -gs * (std::norm(psi.c[0].v[i]) - std::norm(psi.c[1].v[i]));
        return transform(f, Basis::Frequency);
    };

    SpectralField2 prev = source(0.0);
    for (int k = 1; k <= samples; ++k) {
        SpectralField2 cur = source(k * h);
        for (size_t i = 0; i < g.size(); ++i) modes[i].push(prev.v[i], cur.v[i]);
        prev = std::move(cur);
    }
    SpectralField2 phi = SpectralField2::zeros(g, Basis::Frequency);
    for (size_t i = 0; i < g.size(); ++i) phi.v[i] = modes[i].value(0.0, 0.0).phi;
    std::vector<double> out;
    for (double sigma : sigmas) out.push_back(sobolev_norm(phi, sigma));
    return out;
}

double first_iterate_regularity(const SpinorField2& psi0, double sigma, double t) {
    return first_iterate_regularity(psi0, std::vector<double>{sigma}, t).front();
}

SpectralField2 rough_data(double s, std::uint64_t seed, const GridSpec2& g) {
    SpectralField2 f = SpectralField2::zeros(g, Basis::Frequency);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            const int m1 = signed_mode(a, g.n);
            const int m2 = signed_mode(b, g.n);
            const double r = g.dk() * std::hypot(m1, m2);
            f.v[g.index(a, b)] = std::pow(1.0 + r, -(s + 1.0)) * std::exp(cplx(0.0, mode_phase(seed, m1, m2)));
        }
    return f;
}

SpinorField2 rough_spinor(double s, std::uint64_t seed, const GridSpec2& g) {
    return {{rough_data(s, splitmix64(seed ^ 0x51ULL), g), rough_data(s, splitmix64(seed ^ 0xa7ULL), g)}};
}

namespace {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw ContractError("snapshot: truncated file");
    return v;
}

void put_field(std::ostream& os, const SpectralField2& f) {
    for (const auto& z : f.v) {
        put(os, float(z.real()));
        put(os, float(z.imag()));
    }
}

void get_field(std::istream& is, SpectralField2& f) {
    for (auto& z : f.v) {
        const float re = get<float>(is);
        const float im = get<float>(is);
        z = cplx(re, im);
    }
}

}  // namespace

void write_snapshot(const std::string& path, const DKGState& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ContractError("snapshot: cannot open " + path);
    os.write("DKGS", 4);
    put<std::uint32_t>(os, 1);
    put<std::uint32_t>(os, std::uint32_t(s.grid().n));
    put<double>(os, s.grid().box);
    put<double>(os, s.time);
    DKGState c = s;
    for_each_field(c, [&](SpectralField2& f) { put_field(os, f); });
}

DKGState read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ContractError("snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "DKGS", 4) != 0) throw ContractError("snapshot: bad magic");
    if (get<std::uint32_t>(is) != 1) throw ContractError("snapshot: unsupported version");
    const int n = int(get<std::uint32_t>(is));
    const double box = get<double>(is);
    DKGState s = DKGState::zeros(GridSpec2(n, box));
    s.time = get<double>(is);
    for_each_field(s, [&](SpectralField2& f) { get_field(is, f); });
    return s;
}

}  // namespace dkg
