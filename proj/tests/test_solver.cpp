#include <doctest.h>

#include "dkg/experiments.hpp"
#include "dkg/norms.hpp"
#include "dkg/solver.hpp"
#include "dkg/waves.hpp"

#include <filesystem>

using namespace dkg;

namespace {

double state_diff(const DKGState& a, const DKGState& b) {
    double d = 0.0;
    for (int c = 0; c < 2; ++c) {
        d = std::max(d, max_abs_diff(a.psi_plus.c[c], b.psi_plus.c[c]));
        d = std::max(d, max_abs_diff(a.psi_minus.c[c], b.psi_minus.c[c]));
    }
    d = std::max(d, max_abs_diff(a.phi, b.phi));
    return std::max(d, max_abs_diff(a.phi_t, b.phi_t));
}

SolverConfig config(const GridSpec2& g, double dt, double T) {
    SolverConfig c{g};
    c.dt = dt;
    c.T = T;
    return c;
}

}  // namespace

TEST_CASE("projections split the spinor") {
    const GridSpec2 g(32, two_pi);
    const DKGState s = smooth_state(g, 0.5);
    const SpinorField2 pp = project(s.psi_plus, 1);
    const SpinorField2 pm = project(s.psi_plus, -1);
    for (int c = 0; c < 2; ++c) {
        CHECK(max_abs_diff(pp.c[c], s.psi_plus.c[c]) < 1e-14);
        double worst = 0.0;
        for (const auto& z : pm.c[c].v) worst = std::max(worst, std::abs(z));
        CHECK(worst < 1e-14);
    }
}

TEST_CASE("dealias mask") {
    const GridSpec2 g(12, two_pi);
    SpectralField2 f = SpectralField2::zeros(g, Basis::Frequency);
    for (auto& z : f.v) z = 1.0;
    dealias(f);
    for (size_t i = 0; i < g.size(); ++i) {
        const Vec2 xi = g.xi(i);
        const bool keep = std::abs(xi.x) <= 4.0 && std::abs(xi.y) <= 4.0;
        REQUIRE(f.v[i] == cplx(keep ? 1.0 : 0.0));
    }
    SpectralField2 phys = SpectralField2::zeros(g, Basis::Physical);
    CHECK_THROWS_AS(dealias(phys), ContractError);
}

TEST_CASE("linear flow is exact") {
    const GridSpec2 g(16, two_pi);
    const DKGState s = smooth_state(g, 1.0);
    const DKGState a = step(s, 0.7, false);
    for (int c = 0; c < 2; ++c) {
        CHECK(max_abs_diff(a.psi_plus.c[c], half_wave(s.psi_plus.c[c], 1, 0.7)) < 1e-13);
        CHECK(max_abs_diff(a.psi_minus.c[c], half_wave(s.psi_minus.c[c], -1, 0.7)) < 1e-13);
    }
}

TEST_CASE("charge, order and reality on smooth data") {
    const GridSpec2 g(32, two_pi);
    const SolverCheck chk = solver_check(smooth_state(g, 0.5), config(g, 1.0 / 32, 0.5));
    CHECK(chk.charge_drift < 1e-6);
    CHECK(chk.projection_defect < 1e-10);
    CHECK(chk.phi_imag < 1e-12);
    CHECK(chk.richardson == doctest::Approx(16.0).epsilon(0.25));
    CHECK(chk.pass);
}

TEST_CASE("backward integration returns to the data") {
    const GridSpec2 g(32, two_pi);
    const DKGState s = smooth_state(g, 0.5);
    const Trajectory fwd = solve(s, config(g, 1.0 / 64, 0.5));
    const Trajectory back = solve(fwd.states.back(), config(g, -1.0 / 64, -0.5));
    CHECK(back.states.back().time == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(state_diff(back.states.back(), s) < 1e-8);
}

TEST_CASE("solve contracts") {
    const GridSpec2 g(16, two_pi);
    const DKGState s = smooth_state(g, 0.5);
    CHECK_THROWS_AS(solve(s, config(g, 0.0, 1.0)), ContractError);
    CHECK_THROWS_AS(solve(s, config(g, 0.1, -1.0)), ContractError);
    CHECK_THROWS_AS(solve(s, config(g, 0.3, 1.0)), ContractError);
    SolverConfig massive = config(g, 0.1, 1.0);
    massive.mass_dirac = 1.0;
    CHECK_THROWS_AS(solve(s, massive), ContractError);

    SolverConfig rec = config(g, 0.1, 1.0);
    rec.record_every = 3;
    const Trajectory tr = solve(s, rec);
    CHECK(tr.rows.size() == 5);  // 0, 3, 6, 9, 10
    CHECK(tr.rows.back().time == doctest::Approx(1.0));
}

TEST_CASE("snapshot round trip") {
    const GridSpec2 g(16, 3.0);
    DKGState s = rough_state(g, 0.0, 0.5, 1.0, 3);
    s.time = 0.625;
    const auto path = std::filesystem::temp_directory_path() / "dkg_snapshot_test.bin";
    write_snapshot(path.string(), s);
    const DKGState r = read_snapshot(path.string());
    CHECK(r.grid() == g);
    CHECK(r.time == 0.625);
    CHECK(state_diff(r, s) < 1e-6);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_snapshot(path.string()), ContractError);
}

TEST_CASE("rough data refine consistently") {
    const GridSpec2 coarse(16, 10.0), fine(32, 10.0);
    const SpectralField2 a = rough_data(0.2, 5, coarse);
    const SpectralField2 b = rough_data(0.2, 5, fine);
    double worst = 0.0;
    for (size_t i = 0; i < coarse.size(); ++i) {
        const Vec2 xi = coarse.xi(i);
        const int m1 = int(std::lround(xi.x / fine.dk())), m2 = int(std::lround(xi.y / fine.dk()));
        const size_t j = fine.index(m1 < 0 ? m1 + 32 : m1, m2 < 0 ? m2 + 32 : m2);
        worst = std::max(worst, std::abs(a.v[i] - b.v[j]));
    }
    CHECK(worst == 0.0);
    CHECK(std::abs(a.v[1]) == doctest::Approx(std::pow(1.0 + coarse.dk(), -1.2)));
}

TEST_CASE("Picard iteration contracts for small data") {
    const GridSpec2 g(32, two_pi);
    PicardConfig cfg;
    cfg.T = 0.25;
    cfg.intervals = 32;
    const PicardCheck chk = picard_check(rough_state(g, 0.0, 0.5, 2.0, 11), cfg);
    REQUIRE(chk.result.diffs.size() >= 5);
    CHECK(chk.result.diffs[0] > 0.0);
    for (int j = 0; j < 4; ++j) CHECK(chk.result.ratios[size_t(j)] < 1.0);
    CHECK(chk.pass);
}
