#include "dkg/dirac.hpp"

#include <algorithm>

namespace dkg {

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

Mat2 operator*(cplx s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
    return r;
}

Spinor operator*(const Mat2& a, const Spinor& z) {
    return {a(0, 0) * z[0] + a(0, 1) * z[1], a(1, 0) * z[0] + a(1, 1) * z[1]};
}

Mat2 adjoint(const Mat2& a) {
    return {{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

double frobenius(const Mat2& a) {
    double s = 0.0;
    for (const auto& z : a.m) s += std::norm(z);
    return std::sqrt(s);
}

double op_norm(const Mat2& a) {
    // Largest eigenvalue of the Hermitian matrix a^dagger a.
    const Mat2 h = adjoint(a) * a;
    const double p = h(0, 0).real();
    const double q = h(1, 1).real();
    const double off = std::norm(h(0, 1));
    const double lam = 0.5 * (p + q) + std::sqrt(0.25 * (p - q) * (p - q) + off);
    return std::sqrt(std::max(lam, 0.0));
}

cplx inner(const Spinor& z, const Spinor& w) {
    return z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]);
}

double norm(const Spinor& z) { return std::sqrt(std::norm(z[0]) + std::norm(z[1])); }

DiracRep pauli_rep() {
    const cplx i(0.0, 1.0);
    return {
        {{0.0, 1.0, 1.0, 0.0}},
        {{0.0, -i, i, 0.0}},
        {{1.0, 0.0, 0.0, -1.0}},
    };
}

CliffordReport check_clifford(const DiracRep& rep, double tol) {
    const Mat2 id = Mat2::identity();
    const Mat2 zero{};
    const std::array<const Mat2*, 3> g{&rep.alpha1, &rep.alpha2, &rep.beta};
    CliffordReport out;
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            const Mat2 anti = (*g[a]) * (*g[b]) + (*g[b]) * (*g[a]);
            const Mat2 want = a == b ? 2.0 * id : zero;
            out.max_residual = std::max(out.max_residual, frobenius(anti - want));
        }
    double herm = 0.0;
    for (const Mat2* m : g) herm = std::max(herm, frobenius(*m - adjoint(*m)));
    out.hermitian = herm <= tol;
    out.max_residual = std::max(out.max_residual, herm);
    out.ok = out.max_residual <= tol;
    return out;
}

Mat2 projector(const DiracRep& rep, int sign, Vec2 xi) {
    require(sign == 1 || sign == -1, "projector: sign must be +1 or -1");
    const double r = norm(xi);
    require(r > 0.0, "projector: xi must be nonzero");
    const Mat2 a = (xi.x / r) * rep.alpha1 + (xi.y / r) * rep.alpha2;
    return 0.5 * (Mat2::identity() + double(sign) * a);
}

Spinor eigenvector(int sign, Vec2 xi) {
    require(sign == 1 || sign == -1, "eigenvector: sign must be +1 or -1");
    const double r = norm(xi);
    require(r > 0.0, "eigenvector: xi must be nonzero");
    return {1.0, cplx(sign * xi.x / r, sign * xi.y / r)};
}

Mat2 null_symbol(const DiracRep& rep, int sign1, int sign2, Vec2 eta, Vec2 zeta) {
    return projector(rep, sign2, zeta) * rep.beta * projector(rep, sign1, eta);
}

}  // namespace dkg
