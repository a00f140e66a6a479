#include <doctest.h>

#include "dkg/experiments.hpp"
#include "dkg/norms.hpp"
#include "dkg/waves.hpp"

#include <random>

using namespace dkg;

namespace {

SpectralField2 random_modes(const GridSpec2& g, std::uint64_t seed, double kmax = 1e300) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    SpectralField2 f = SpectralField2::zeros(g, Basis::Frequency);
    for (size_t i = 0; i < g.size(); ++i)
        if (norm(g.xi(i)) <= kmax) f.v[i] = cplx(N(rng), N(rng));
    return f;
}

double l2(const SpectralField2& f) { return sobolev_norm(f, 0.0); }

int wrap_index(int m, int n) { return m < 0 ? m + n : m; }

}  // namespace

TEST_CASE("half wave propagator") {
    const GridSpec2 g(16, two_pi);
    const SpectralField2 f = random_modes(g, 1);
    CHECK(max_abs_diff(half_wave(f, 1, 0.0), f) == 0.0);
    CHECK(l2(half_wave(f, -1, 1.7)) == doctest::Approx(l2(f)).epsilon(1e-13));

    SpectralField2 one = SpectralField2::zeros(g, Basis::Frequency);
    const size_t i = g.index(3, 4);
    one.v[i] = 1.0;
    const double t = 0.3;
    CHECK(std::abs(half_wave(one, 1, t).v[i] - std::exp(cplx(0.0, -5.0 * t))) < 1e-14);
    CHECK(std::abs(half_wave(one, -1, t).v[i] - std::exp(cplx(0.0, 5.0 * t))) < 1e-14);

    // group law
    const SpectralField2 ab = half_wave(half_wave(f, 1, 0.4), 1, 0.9);
    CHECK(max_abs_diff(ab, half_wave(f, 1, 1.3)) < 1e-12);
}

TEST_CASE("free wave film sits on the cone") {
    // integer radii only, so every mode is exactly periodic in time
    const GridSpec3 g(32, 32, two_pi, two_pi);
    const GridSpec2 gs = g.spatial();
    SpectralField2 f = SpectralField2::zeros(gs, Basis::Frequency);
    const int pts[][2] = {{3, 4}, {-4, 3}, {5, 0}, {0, -5}, {6, 8}, {-8, -6}, {1, 0}};
    for (const auto& p : pts) f.v[gs.index(wrap_index(p[0], 32), wrap_index(p[1], 32))] = cplx(1.0 + p[0], p[1]);

    for (int sign : {1, -1}) {
        const SpectralField3 film = transform(free_wave_film(f, sign, g), Basis::Frequency);
        double on = 0.0, all = 0.0;
        for (int it = 0; it < g.n_t; ++it)
            for (int a = 0; a < g.n_x; ++a)
                for (int b = 0; b < g.n_x; ++b) {
                    const double m = std::norm(film.v[g.index(it, a, b)]);
                    all += m;
                    if (std::abs(g.tau(it) + sign * std::hypot(g.freq(a), g.freq(b))) <= g.dtau()) on += m;
                }
        CAPTURE(sign);
        CHECK(on / all >= 0.99);
    }

    SUBCASE("mirror symmetry") {
        SpectralField2 fc = transform(f, Basis::Physical);
        for (auto& z : fc.v) z = std::conj(z);
        const SpectralField3 a = free_wave_film(f, -1, g);
        const SpectralField3 b = free_wave_film(transform(fc, Basis::Frequency), 1, g);
        double err = 0.0;
        for (size_t i = 0; i < a.v.size(); ++i) err = std::max(err, std::abs(a.v[i] - std::conj(b.v[i])));
        CHECK(err < 1e-12);
    }
    SUBCASE("rotation by 90 degrees") {
        SpectralField2 r = SpectralField2::zeros(gs, Basis::Frequency);
        for (int a = 0; a < 32; ++a)
            for (int b = 0; b < 32; ++b) r.v[gs.index(wrap_index(-(b - (b >= 16 ? 32 : 0)), 32), a)] = f.v[gs.index(a, b)];
        const SpectralField3 u = free_wave_film(f, 1, g);
        const SpectralField3 v = free_wave_film(r, 1, g);
        double err = 0.0;
        for (int it = 0; it < g.n_t; ++it)
            for (int a = 0; a < 32; ++a)
                for (int b = 0; b < 32; ++b)
                    err = std::max(err, std::abs(v.v[g.index(it, wrap_index(-(b - (b >= 16 ? 32 : 0)), 32), a)] -
                                                 u.v[g.index(it, a, b)]));
        CHECK(err < 1e-12);
    }
}

TEST_CASE("wave Duhamel") {
    const GridSpec2 g(16, two_pi);
    const SpectralField2 p0 = random_modes(g, 3), p1 = random_modes(g, 4);
    TimeSeries2 F{0.05, {}};
    for (int j = 0; j < 21; ++j) F.slices.push_back(SpectralField2::zeros(g, Basis::Frequency));

    SUBCASE("zero source is the free evolution") {
        const WaveSolution s = wave_duhamel(p0, p1, F);
        REQUIRE(s.phi.slices.size() == 21);
        const double t = 1.0;
        double err = 0.0;
        for (size_t i = 0; i < g.size(); ++i) {
            const double k = norm(g.xi(i));
            const cplx want = std::cos(k * t) * p0.v[i] + (k == 0.0 ? t : std::sin(k * t) / k) * p1.v[i];
            err = std::max(err, std::abs(s.phi.slices.back().v[i] - want));
        }
        CHECK(err < 1e-12);
    }
    SUBCASE("constant source on the zero mode") {
        for (auto& sl : F.slices) sl.v[0] = 1.0;
        const WaveSolution s = wave_duhamel(SpectralField2::zeros(g, Basis::Frequency),
                                            SpectralField2::zeros(g, Basis::Frequency), F);
        CHECK(std::abs(s.phi.slices.back().v[0] - cplx(-0.5)) < 1e-13);
        CHECK(std::abs(s.phi_t.slices.back().v[0] - cplx(-1.0)) < 1e-13);
    }
}

TEST_CASE("dyadic partition") {
    const GridSpec2 g(32, 5.0);
    const SpectralField2 f = random_modes(g, 5);
    SpectralField2 sum = SpectralField2::zeros(g, Basis::Frequency);
    sum.v[0] = f.v[0];
    double sq = std::norm(f.v[0]) * std::pow(g.dk() / two_pi, 2);
    for (double lam : dyadic_levels(g)) {
        const SpectralField2 p = dyadic_project(f, lam);
        for (size_t i = 0; i < g.size(); ++i) sum.v[i] += p.v[i];
        sq += std::pow(l2(p), 2);
    }
    CHECK(max_abs_diff(sum, f) < 1e-14);
    CHECK(std::sqrt(sq) == doctest::Approx(l2(f)).epsilon(1e-12));

    SUBCASE("boundary goes to the lower annulus") {
        const GridSpec2 h(16, two_pi);
        SpectralField2 e = SpectralField2::zeros(h, Basis::Frequency);
        e.v[h.index(4, 0)] = 1.0;
        CHECK(dyadic_project(e, 2.0).v[h.index(4, 0)] == cplx(1.0));
        CHECK(dyadic_project(e, 4.0).v[h.index(4, 0)] == cplx(0.0));
    }
}

TEST_CASE("mu-squares tile the annulus") {
    const GridSpec2 g(64, two_pi / 0.5);
    const SpectralField2 f = random_modes(g, 6);
    const double lam = 4.0;
    for (double mu : {1.0, 2.0, 3.0}) {
        const SpectralField2 whole = dyadic_project(f, lam);
        SpectralField2 sum = SpectralField2::zeros(g, Basis::Frequency);
        const int m = int(std::ceil(2.0 * lam / mu)) + 1;
        for (int j = -m; j <= m; ++j)
            for (int k = -m; k <= m; ++k) {
                const SpectralField2 p = square_project(f, lam, mu, j, k);
                for (size_t i = 0; i < g.size(); ++i) sum.v[i] += p.v[i];
            }
        CAPTURE(mu);
        CHECK(max_abs_diff(sum, whole) < 1e-14);
    }
}

TEST_CASE("high-high to low interaction") {
    const GridSpec2 g(8, two_pi);
    const SpectralField2 f = random_modes(g, 7, 1.5);
    const SpectralField2 h = random_modes(g, 8, 1.5);

    SUBCASE("no restriction is the plain product") {
        SpectralField2 fx = transform(f, Basis::Physical), hx = transform(h, Basis::Physical);
        for (size_t i = 0; i < g.size(); ++i) fx.v[i] *= hx.v[i];
        CHECK(max_abs_diff(hh_to_low(f, h, 10.0), transform(fx, Basis::Frequency)) < 1e-12);
    }
    SUBCASE("direct convolution with the frequency restriction") {
        const double c = 0.4;
        SpectralField2 want = SpectralField2::zeros(g, Basis::Frequency);
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) {
                const Vec2 a = g.xi(i), b = g.xi(j), x = a + b;
                if (norm(x) > c * (norm(a) + norm(b))) continue;
                want.v[g.index(wrap_index(int(std::lround(x.x)), 8), wrap_index(int(std::lround(x.y)), 8))] +=
                    f.v[i] * h.v[j] / (two_pi * two_pi);
            }
        const SpectralField2 got = hh_to_low(f, h, c);
        CHECK(max_abs_diff(got, want) < 1e-12);
        for (size_t i = 0; i < g.size(); ++i) {
            if (std::abs(got.v[i]) == 0.0) continue;
            CHECK(norm(g.xi(i)) <= c * 2.0 * 1.5 * std::sqrt(2.0) + 1e-12);
        }
        CHECK(max_abs_diff(hh_to_low(h, f, c), got) < 1e-13);
        SpectralField2 f2 = f;
        for (auto& z : f2.v) z *= cplx(2.0, -1.0);
        SpectralField2 lin = got;
        for (auto& z : lin.v) z *= cplx(2.0, -1.0);
        CHECK(max_abs_diff(hh_to_low(f2, h, c), lin) < 1e-12);
    }
    SUBCASE("aliased output is refused") {
        const SpectralField2 wide = random_modes(g, 9);
        CHECK_THROWS_AS(hh_to_low(wide, wide, 10.0), ContractError);
    }
}

TEST_CASE("bilinear Strichartz ratio") {
    const BilinearCase c{4.0, 0.375, 0.375, 0.0, 1, 1};
    const double lam = 2.0;
    const GridSpec2 coarse(64, 20.0), fine(128, 20.0);
    const RatioResult a = strichartz_ratio(c, annulus_bump(coarse, lam, 0.0), annulus_bump(coarse, lam, 3.0), 1.0, 64);
    const RatioResult b = strichartz_ratio(c, annulus_bump(fine, lam, 0.0), annulus_bump(fine, lam, 3.0), 1.0, 128);
    CHECK(a.ratio > 0.0);
    CHECK(b.ratio / a.ratio == doctest::Approx(1.0).epsilon(0.2));
    CHECK(a.ratio == doctest::Approx(a.lhs / a.rhs));

    const GridSpec2 tiny(16, 20.0);
    CHECK_THROWS_AS(strichartz_ratio(c, annulus_bump(tiny, 2.0, 0.0), annulus_bump(tiny, 2.0, 0.0), 1.0, 8),
                    ContractError);
}

TEST_CASE("improved square ratio at q = infinity") {
    const GridSpec2 g(128, two_pi / 0.25);
    SpectralField2 ones = SpectralField2::zeros(g, Basis::Frequency);
    for (auto& z : ones.v) z = 1.0;
    const double lam = 8.0, mu = 2.0;
    const SpectralField2 f = square_project(ones, lam, mu, 6, 0);
    const RatioResult r = improved_square_strichartz_ratio(f, lam, mu, 6, 0, INFINITY, 16);
    CHECK(r.ratio > 0.0);
    CHECK(r.ratio <= 1.0);
    CHECK_THROWS_AS(improved_square_strichartz_ratio(ones, lam, mu, 6, 0, 4.0, 8), ContractError);
}

TEST_CASE("window energy: serial and parallel agree") {
    const GridSpec2 g(128, 128.0 / 16);
    const SpectralField2 f = sector_data(g, 16, 1.0 / 16, 0.0);
    const SpectralField2 h = sector_data(g, 16, 1.0 / 16, pi);
    const HHLowCase c{1, -1, 0.125, 0.125, 0.25, 0.25};
    const RatioResult s = hh_low_ratio(c, f, h, 1.0, Exec::Serial);
    const RatioResult p = hh_low_ratio(c, f, h, 1.0, Exec::Parallel);
    CHECK(s.ratio > 0.0);
    CHECK(s.ratio == doctest::Approx(p.ratio).epsilon(1e-12));
}
