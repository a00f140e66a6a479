#include <doctest.h>

#include "dkg/estimates.hpp"
#include "dkg/norms.hpp"

#include <random>

using namespace dkg;

namespace {

int wrap(int m, int n) { return m < 0 ? m + n : m; }

ColumnScalarField box_support(int a1, int b1, int a2, int b2, double lo, double hi) {
    ColumnSupport s;
    s.i1_min = a1;
    s.i1_max = b1;
    s.i2_min = a2;
    s.i2_max = b2;
    s.contains = [](Vec2) { return true; };
    s.band = [lo, hi](Vec2) { return Band{lo, hi}; };
    return build_support(s);
}

SpinorField3 dense(const ColumnSpinorField& f, const GridSpec3& g) {
    SpinorField3 out{{SpectralField3::zeros(g, Basis::Frequency), SpectralField3::zeros(g, Basis::Frequency)}};
    for (size_t c = 0; c < f.columns(); ++c)
        for (int k = 0; k < f.len[c]; ++k) {
            const size_t i = g.index(wrap(f.lo[c] + k, g.n_t), wrap(f.i1_of(c), g.n_x), wrap(f.i2_of(c), g.n_x));
            for (int j = 0; j < 2; ++j) out.c[j].v[i] = f.values[f.off[c] + k][j];
        }
    return out;
}

SpinorField3 random_spinor3(const GridSpec3& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    SpinorField3 p{{SpectralField3::zeros(g, Basis::Frequency), SpectralField3::zeros(g, Basis::Frequency)}};
    for (auto& c : p.c)
        for (auto& z : c.v) z = cplx(N(rng), N(rng));
    return p;
}

}  // namespace

TEST_CASE("parameter region examples") {
    CHECK(region_check(0.0, 0.5).status == RegionStatus::Inside);
    CHECK(region_check(0.5, 1.0).status == RegionStatus::Inside);
    const RegionReport out = region_check(-0.2, 0.3);
    CHECK(out.status == RegionStatus::Outside);
    CHECK_FALSE(out.violated.empty());
    CHECK(region_name(RegionStatus::Boundary) == "boundary");
}

TEST_CASE("family exponents") {
    CHECK(family_delta(Family::R1, 0.0, 0.0) == doctest::Approx(0.75));
    CHECK(family_delta(Family::R2, 0.0, 0.0) == doctest::Approx(0.75));
    CHECK(family_delta(Family::R3, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(family_delta(Family::S, 0.0, 0.0) == doctest::Approx(0.5));
    for (Family f : {Family::R1, Family::R2, Family::R3})
        for (double s : {-0.2, 0.0, 0.3}) CHECK(family_delta(f, s, family_boundary(f, s)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(family_boundary(Family::S, 0.0), ContractError);
    CHECK(parse_family("R2") == Family::R2);
    CHECK(family_name(Family::S) == "S");
    CHECK_THROWS_AS(parse_family("R4"), ContractError);
}

TEST_CASE("dense and sparse null forms agree") {
    const GridSpec3 g(16, 16, two_pi, two_pi);  // unit spacings
    const auto f1 = [](double lam, Vec2 eta) { return Spinor{cplx(1.0 + lam, eta.x), cplx(eta.y, -1.0)}; };
    const auto f2 = [](double lam, Vec2 eta) { return Spinor{cplx(0.5, lam * eta.y), cplx(2.0 - eta.x, 0.25)}; };
    const ColumnSpinorField a = fill_spinor(box_support(2, 3, 0, 1, -4.0, -2.0), f1);
    const ColumnSpinorField b = fill_spinor(box_support(1, 2, -1, 0, -3.0, -2.0), f2);
    REQUIRE(a.points() == 12);
    REQUIRE(b.points() == 8);

    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            ColumnScalarField out = box_support(-3, 3, -3, 3, -4.0, 4.0);
            null_form_direct(a, b, s1, s2, out);
            const SpectralField3 N = null_form(dense(a, g), dense(b, g), s1, s2);
            double err = 0.0, scale = 0.0;
            for (size_t c = 0; c < out.columns(); ++c)
                for (int k = 0; k < out.len[c]; ++k) {
                    const cplx d = N.v[g.index(wrap(out.lo[c] + k, 16), wrap(out.i1_of(c), 16), wrap(out.i2_of(c), 16))];
                    err = std::max(err, std::abs(d - out.values[out.off[c] + k]));
                    scale = std::max(scale, std::abs(d));
                }
            CAPTURE(s1);
            CAPTURE(s2);
            CHECK(scale > 0.0);
            CHECK(err <= 1e-12 * scale);
        }
}

TEST_CASE("column correlation: serial and parallel agree exactly") {
    const Counterexample ce = build_counterexample(Family::R1, 8.0);
    ColumnScalarField a = ce.out, b = ce.out;
    null_form_direct(ce.psi, ce.psi2, ce.sign1, ce.sign2, a, Exec::Serial);
    null_form_direct(ce.psi, ce.psi2, ce.sign1, ce.sign2, b, Exec::Parallel);
    CHECK(a.values == b.values);
}

TEST_CASE("direct and dual forms") {
    const GridSpec3 g(8, 8, 4.0, two_pi);
    SpectralField3 phi = SpectralField3::zeros(g, Basis::Physical);
    std::mt19937_64 rng(21);
    std::normal_distribution<double> N;
    for (auto& z : phi.v) z = N(rng);
    phi = transform(phi, Basis::Frequency);
    const SpinorField3 psi = random_spinor3(g, 22);
    const EstimateCase c{EstimateForm::A, 1, -1, 0.2, 0.4, 0.05};
    const DualCheck d = dual_form_check(c, phi, psi);
    CHECK(d.direct_ratio > 0.0);
    CHECK(d.direct_ratio <= d.dual_ratio * (1.0 + 1e-10));
    CHECK(std::abs(d.pairing_field - d.pairing_null) <= 1e-10 * std::abs(d.pairing_field));
}

TEST_CASE("estimate sides") {
    const GridSpec3 g(8, 8, 4.0, two_pi);
    const SpinorField3 p = random_spinor3(g, 30), q = random_spinor3(g, 31);
    const Sides s = estimate_sides({EstimateForm::B, 1, 1, 0.0, 0.5, 0.0}, p, q);
    CHECK(s.ratio == doctest::Approx(s.lhs / s.rhs));
    CHECK_THROWS_AS(estimate_sides({EstimateForm::B, 1, 1, 0.0, 0.5, -0.1}, p, q), ContractError);
}

TEST_CASE("log-log slope") {
    const std::vector<double> x{1.0, 2.0, 4.0, 8.0, 16.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, -1.5));
    CHECK(loglog_slope(x, y) == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("time cutoff") {
    for (double t : {0.0, 0.5, 1.0}) CHECK(cutoff_chi(t) == 1.0);
    for (double t : {2.0, 3.5}) CHECK(cutoff_chi(t) == 0.0);
    CHECK(cutoff_chi(1.5) == doctest::Approx(0.5));
    double prev = 1.0;
    for (double t = 1.0; t <= 2.0; t += 0.01) {
        CHECK(cutoff_chi(-t) == cutoff_chi(t));
        CHECK(cutoff_chi(t) <= prev);
        prev = cutoff_chi(t);
    }
}
