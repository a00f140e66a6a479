#include <doctest.h>

#include "dkg/grid.hpp"
#include "dkg/norms.hpp"

#include <random>

using namespace dkg;

namespace {

SpectralField2 random_field(const GridSpec2& g, Basis b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    SpectralField2 f = SpectralField2::zeros(g, b);
    for (auto& z : f.v) z = cplx(N(rng), N(rng));
    return f;
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("grid construction rejects odd or tiny sizes") {
    CHECK_THROWS_AS(GridSpec2(5, 1.0), ContractError);
    CHECK_THROWS_AS(GridSpec2(2, 1.0), ContractError);
    CHECK_THROWS_AS(GridSpec2(8, 0.0), ContractError);
    CHECK_THROWS_AS(GridSpec3(6, 3, 1.0, 1.0), ContractError);
    const GridSpec2 g(8, two_pi);
    CHECK(g.dk() == doctest::Approx(1.0));
    CHECK(g.freq(3) == 3.0);
    CHECK(g.freq(4) == -4.0);
    CHECK(g.freq(7) == -1.0);
}

TEST_CASE("constant field maps to the zero mode") {
    const GridSpec2 g(16, 4.0);
    SpectralField2 f = SpectralField2::zeros(g, Basis::Physical);
    for (auto& z : f.v) z = 1.0;
    const SpectralField2 fh = transform(f, Basis::Frequency);
    // hat 1 = box^2 delta_0 on the lattice
    CHECK(std::abs(fh.v[0] - cplx(16.0)) < 1e-12);
    for (size_t i = 1; i < fh.v.size(); ++i) CHECK(std::abs(fh.v[i]) < 1e-12);
}

TEST_CASE("plane wave has a single coefficient") {
    const GridSpec3 g(8, 16, 4.0, two_pi);
    SpectralField3 u = SpectralField3::zeros(g, Basis::Physical);
    const int k_t = 2, k1 = -3, k2 = 5;
    for (int it = 0; it < g.n_t; ++it)
        for (int a = 0; a < g.n_x; ++a)
            for (int b = 0; b < g.n_x; ++b) {
                const double ph = g.t(it) * k_t * g.dtau() + g.spatial().coord(a) * k1 * g.dk() +
                                  g.spatial().coord(b) * k2 * g.dk();
                u.v[g.index(it, a, b)] = std::exp(cplx(0.0, ph));
            }
    const SpectralField3 uh = transform(u, Basis::Frequency);
    // the forward transform pairs e^{-i(t tau + x xi)}, so the peak sits at (tau0, xi0)
    const size_t peak = g.index(k_t, k1 + g.n_x, k2);
    double rest = 0.0;
    for (size_t i = 0; i < uh.v.size(); ++i)
        if (i != peak) rest = std::max(rest, std::abs(uh.v[i]));
    CHECK(std::abs(uh.v[peak]) == doctest::Approx(4.0 * two_pi * two_pi));
    CHECK(rest < 1e-9);
}

TEST_CASE("round trip and Plancherel") {
    const GridSpec2 g(32, 3.0);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const SpectralField2 f = random_field(g, Basis::Physical, seed);
        const SpectralField2 back = transform(transform(f, Basis::Frequency), Basis::Physical);
        REQUIRE(rel_l2(back.v, f.v) <= 1e-10);
    }
    const SpectralField2 f = random_field(g, Basis::Physical, 7);
    double phys = 0.0;
    for (const auto& z : f.v) phys += std::norm(z);
    phys = std::sqrt(phys * g.dx() * g.dx());
    CHECK(sobolev_norm(f, 0.0) == doctest::Approx(phys).epsilon(1e-12));

    const GridSpec3 g3(8, 8, 2.0, 5.0);
    SpectralField3 u = SpectralField3::zeros(g3, Basis::Physical);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> N;
    for (auto& z : u.v) z = cplx(N(rng), N(rng));
    const SpectralField3 uh = transform(u, Basis::Frequency);
    double a = 0.0, b = 0.0;
    for (const auto& z : u.v) a += std::norm(z);
    for (const auto& z : uh.v) b += std::norm(z);
    a *= g3.dt() * g3.dx() * g3.dx();
    b *= g3.dtau() * g3.dk() * g3.dk() / std::pow(two_pi, 3);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    CHECK(rel_l2(transform(uh, Basis::Physical).v, u.v) <= 1e-10);
}

TEST_CASE("multipliers") {
    const GridSpec2 g(16, two_pi);
    const SpectralField2 f = random_field(g, Basis::Frequency, 11);

    SUBCASE("identity symbol") {
        const SpectralField2 out = apply_multiplier(f, Symbol2{[](Vec2) { return cplx(1.0); }, ""});
        CHECK(max_abs_diff(out, f) == 0.0);
    }
    SUBCASE("homogeneous power on a plane wave") {
        SpectralField2 w = SpectralField2::zeros(g, Basis::Physical);
        for (size_t i = 0; i < g.size(); ++i) w.v[i] = std::exp(cplx(0.0, 3.0 * g.x(i).x + 4.0 * g.x(i).y));
        const SpectralField2 out = apply_multiplier(w, homogeneous_power(0.5));
        CHECK(out.basis == Basis::Physical);
        double err = 0.0;
        for (size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(out.v[i] - std::sqrt(5.0) * w.v[i]));
        CHECK(err < 1e-12);
    }
    SUBCASE("inverse pair and composition") {
        const SpectralField2 back = apply_multiplier(apply_multiplier(f, japanese_power(1.0)), japanese_power(-1.0));
        CHECK(max_abs_diff(back, f) < 1e-10);
        const SpectralField2 two = apply_multiplier(apply_multiplier(f, japanese_power(0.3)), japanese_power(0.4));
        const SpectralField2 one = apply_multiplier(f, japanese_power(0.7));
        CHECK(max_abs_diff(two, one) < 1e-12 * 20.0);
    }
    SUBCASE("negative homogeneous power zeroes the zero mode") {
        Notes notes;
        const SpectralField2 out = apply_multiplier(f, homogeneous_power(-0.5), &notes);
        CHECK(out.v[0] == cplx(0.0));
        CHECK(notes.contains("zero mode"));
    }
    SUBCASE("non-finite symbol is an error") {
        const Symbol2 bad{[](Vec2 xi) { return cplx(1.0 / norm(xi)); }, ""};
        CHECK_THROWS_AS(apply_multiplier(f, bad), NumericalError);
    }
}

TEST_CASE("weight examples") {
    const Weights a = weights_at(0.0, {2, 0}, {1, 0}, 0.0);
    CHECK(a.rho_plus == doctest::Approx(2.0));
    CHECK(a.rho_minus == doctest::Approx(0.0));
    const Weights b = weights_at(0.0, {1, 0}, {0, 1}, 0.0);
    CHECK(b.rho_minus == doctest::Approx(std::sqrt(2.0)));
    const Weights c = weights_at(1.0, {0, 0}, {3, 4}, -5.0);
    CHECK(c.B == 0.0);
    const Weights d = weights_at(-2.0, {1, 1}, {2, 3}, 0.5);
    CHECK(d.A == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(d.C_plus == doctest::Approx(0.5 + 2.0 + std::sqrt(5.0)));
    CHECK(d.C_minus == doctest::Approx(0.5 + 2.0 - std::sqrt(5.0)));
}

TEST_CASE("weight inequalities on random quadruples") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-50.0, 50.0);
    long bad = 0;
    for (int k = 0; k < 1'000'000; ++k) {
        const Vec2 eta{U(rng), U(rng)};
        const Vec2 xi{U(rng), U(rng)};
        const double tau = U(rng), lambda = U(rng);
        const Weights w = weights_at(tau, xi, eta, lambda);
        const double m = std::min(norm(eta), norm(eta - xi));
        const double slack = 1e-12 * (1.0 + norm(eta) + norm(xi) + std::abs(tau) + std::abs(lambda));
        if (w.rho_plus > 2.0 * m + slack || w.rho_minus > 2.0 * m + slack) ++bad;
        if (w.rho_plus > std::abs(w.A) + std::abs(w.B) + std::abs(w.C_plus) + slack) ++bad;
        if (w.rho_minus > std::abs(w.A) + std::abs(w.B) + std::abs(w.C_minus) + slack) ++bad;
        if (w.rho_plus < -slack || w.rho_minus < -slack) ++bad;
    }
    CHECK(bad == 0);
}
