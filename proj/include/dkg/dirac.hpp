#pragma once

#include "dkg/types.hpp"

#include <array>

namespace dkg {

using Spinor = std::array<cplx, 2>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<cplx, 4> m{};

    cplx& operator()(int r, int c) { return m[2 * r + c]; }
    cplx operator()(int r, int c) const { return m[2 * r + c]; }

    static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);
Spinor operator*(const Mat2& a, const Spinor& z);
Mat2 adjoint(const Mat2& a);
double frobenius(const Mat2& a);
double op_norm(const Mat2& a);

/// <z, w> = w^dagger z
cplx inner(const Spinor& z, const Spinor& w);
double norm(const Spinor& z);

struct DiracRep {
    Mat2 alpha1;
    Mat2 alpha2;
    Mat2 beta;
};

DiracRep pauli_rep();

struct CliffordReport {
    double max_residual = 0.0;
    bool hermitian = false;
    bool ok = false;
};

CliffordReport check_clifford(const DiracRep& rep, double tol = 1e-12);

/// Pi_pm(xi) = (I pm (xi/|xi|).alpha) / 2; xi must be nonzero.
Mat2 projector(const DiracRep& rep, int sign, Vec2 xi);

/// Unnormalized eigenvectors of the Pauli representation:
/// v+(xi) = (1, (xi1 + i xi2)/|xi|), v-(xi) = v+(-xi); |v|^2 = 2.
Spinor eigenvector(int sign, Vec2 xi);

/// Bilinear symbol Pi_2(zeta) beta Pi_1(eta), so that
/// <beta Pi_1(eta) z, Pi_2(zeta) w> = w^dagger (symbol) z.
Mat2 null_symbol(const DiracRep& rep, int sign1, int sign2, Vec2 eta, Vec2 zeta);

}  // namespace dkg
