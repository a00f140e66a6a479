#include <doctest.h>

#include "dkg/dirac.hpp"
#include "dkg/experiments.hpp"

#include <random>

using namespace dkg;

namespace {

// Largest singular value from the eigenvalues of M^dagger M, computed directly.
double svd_oracle(const Mat2& m) {
    const Mat2 h = adjoint(m) * m;
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const double b2 = std::norm(h(0, 1));
    const double top = 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + b2);
    return std::sqrt(std::max(top, 0.0));
}

Vec2 random_vec(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    return {U(rng), U(rng)};
}

}  // namespace

TEST_CASE("Clifford identities") {
    CHECK(check_clifford(pauli_rep()).ok);
    CHECK(check_clifford(parse_rep("alt")).ok);
    const CliffordReport bad = check_clifford(parse_rep("beta_identity"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.max_residual > 1.0);
    CHECK(check_clifford(pauli_rep(), 1e-14).max_residual <= 1e-14);
    CHECK_THROWS_AS(parse_rep("dirac"), ContractError);
}

TEST_CASE("projector examples") {
    const DiracRep rep = pauli_rep();
    const Mat2 p = projector(rep, 1, {1, 0});
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(p(r, c) - cplx(0.5)) < 1e-15);
    CHECK_THROWS_AS(projector(rep, 1, {0, 0}), ContractError);
    CHECK_THROWS_AS(eigenvector(1, {0, 0}), ContractError);

    std::mt19937_64 rng(1);
    for (int k = 0; k < 100000; ++k) {
        const Vec2 xi = random_vec(rng);
        const Mat2 pp = projector(rep, 1, xi), pm = projector(rep, -1, xi);
        REQUIRE(frobenius(pp + pm - Mat2::identity()) < 1e-12);
        REQUIRE(frobenius(pp * pp - pp) < 1e-12);
        REQUIRE(frobenius(pp - adjoint(pp)) < 1e-12);
        const Mat2 xa = cplx(xi.x) * rep.alpha1 + cplx(xi.y) * rep.alpha2;
        REQUIRE(frobenius(xa * pm + cplx(norm(xi)) * pm) < 1e-12 * (1.0 + norm(xi)));
    }
}

TEST_CASE("eigenvectors and the eigenproduct") {
    const Spinor v = eigenvector(1, {1, 0});
    CHECK(std::abs(v[0] - cplx(1.0)) < 1e-15);
    CHECK(std::abs(v[1] - cplx(1.0)) < 1e-15);
    const Spinor w = eigenvector(-1, {0, 2});
    CHECK(std::abs(w[1] - cplx(0.0, -1.0)) < 1e-15);

    const DiracRep rep = pauli_rep();
    std::mt19937_64 rng(2);
    for (int k = 0; k < 10000; ++k) {
        const Vec2 eta = random_vec(rng), zeta = random_vec(rng);
        const Spinor ve = eigenvector(1, eta);
        const Spinor pv = projector(rep, 1, eta) * ve;
        REQUIRE(std::abs(pv[0] - ve[0]) + std::abs(pv[1] - ve[1]) < 1e-12);
        const double c = dot(eta, zeta) / (norm(eta) * norm(zeta));
        const double s = wedge(eta, zeta) / (norm(eta) * norm(zeta));
        REQUIRE(std::abs(inner(rep.beta * ve, eigenvector(1, zeta)) - cplx(1.0 - c, s)) < 1e-12);
    }
    CHECK(std::abs(inner(rep.beta * eigenvector(1, {2, 3}), eigenvector(1, {2, 3}))) < 1e-15);
}

TEST_CASE("null symbol norm") {
    const DiracRep rep = pauli_rep();
    CHECK(op_norm(null_symbol(rep, 1, 1, {1, 2}, {1, 2})) < 1e-15);
    CHECK_THROWS_AS(null_symbol(rep, 1, 1, {0, 0}, {1, 0}), ContractError);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10000; ++k) {
        const Vec2 eta = random_vec(rng), zeta = random_vec(rng);
        const Mat2 m = null_symbol(rep, 1, 1, eta, zeta);
        const double ang = angle_between(eta, zeta);
        REQUIRE(std::abs(op_norm(m) - svd_oracle(m)) < 1e-12);
        REQUIRE(std::abs(svd_oracle(m) - std::sin(ang / 2.0)) < 1e-12);
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                REQUIRE(op_norm(null_symbol(rep, s1, s2, eta, zeta)) <=
                        angle_between(double(s1) * eta, double(s2) * zeta) + 1e-12);
    }
}

TEST_CASE("algebra suite") {
    const AlgebraReport good = verify_algebra(pauli_rep(), 20000, 9);
    CHECK(good.ok);
    CHECK(good.checks.size() == 11);
    const AlgebraReport alt = verify_algebra(parse_rep("alt"), 20000, 9);
    CHECK(alt.ok);
    const AlgebraReport bad = verify_algebra(parse_rep("beta_identity"), 1000, 9);
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_failure == "clifford");
}
