#pragma once

#include "dkg/types.hpp"

#include <array>
#include <functional>

namespace dkg {

// ---------------------------------------------------------------------------
// Periodic grids. Index i maps to the signed mode m = i for i < n/2 and
// i - n otherwise; positions are wrapped the same way so the origin sits at
// index 0. Frequencies are m * 2*pi/box.
// ---------------------------------------------------------------------------

enum class Basis { Physical, Frequency };

inline int signed_mode(int i, int n) { return i < n / 2 ? i : i - n; }

struct GridSpec2 {
    int n = 0;
    double box = 0.0;

    GridSpec2() = default;
    GridSpec2(int n_, double box_);

    double dx() const { return box / n; }
    double dk() const { return two_pi / box; }
    size_t size() const { return static_cast<size_t>(n) * n; }
    size_t index(int i0, int i1) const { return static_cast<size_t>(i0) * n + i1; }
    double freq(int i) const { return signed_mode(i, n) * dk(); }
    double coord(int i) const { return signed_mode(i, n) * dx(); }
    Vec2 xi(size_t idx) const { return {freq(int(idx / n)), freq(int(idx % n))}; }
    Vec2 x(size_t idx) const { return {coord(int(idx / n)), coord(int(idx % n))}; }
    /// Largest |xi_j| representable on both sides of zero.
    double nyquist() const { return (n / 2 - 1) * dk(); }

    bool operator==(const GridSpec2&) const = default;
};

struct GridSpec3 {
    int n_t = 0;
    int n_x = 0;
    double box_t = 0.0;
    double box_x = 0.0;

    GridSpec3() = default;
    GridSpec3(int n_t_, int n_x_, double box_t_, double box_x_);

    GridSpec2 spatial() const { return {n_x, box_x}; }
    double dt() const { return box_t / n_t; }
    double dtau() const { return two_pi / box_t; }
    double dx() const { return box_x / n_x; }
    double dk() const { return two_pi / box_x; }
    size_t size() const { return static_cast<size_t>(n_t) * n_x * n_x; }
    size_t index(int it, int i0, int i1) const {
        return (static_cast<size_t>(it) * n_x + i0) * n_x + i1;
    }
    double tau(int it) const { return signed_mode(it, n_t) * dtau(); }
    double t(int it) const { return signed_mode(it, n_t) * dt(); }
    double freq(int i) const { return signed_mode(i, n_x) * dk(); }

    bool operator==(const GridSpec3&) const = default;
};

// ---------------------------------------------------------------------------
// Fields. Fourier convention f^(xi) = int e^{-i x.xi} f(x) dx, so the
// discrete forward transform is dx^2 * DFT and Plancherel reads
// ||f^||_2 = 2*pi ||f||_2 (and (2*pi)^{3/2} in space-time).
// ---------------------------------------------------------------------------

struct SpectralField2 {
    GridSpec2 grid;
    Basis basis = Basis::Frequency;
    std::vector<cplx> v;

    static SpectralField2 zeros(const GridSpec2& g, Basis b);
    cplx& operator[](size_t i) { return v[i]; }
    const cplx& operator[](size_t i) const { return v[i]; }
};

struct SpectralField3 {
    GridSpec3 grid;
    Basis basis = Basis::Frequency;
    std::vector<cplx> v;

    static SpectralField3 zeros(const GridSpec3& g, Basis b);
    cplx& operator[](size_t i) { return v[i]; }
    const cplx& operator[](size_t i) const { return v[i]; }
};

struct SpinorField2 {
    std::array<SpectralField2, 2> c;
    static SpinorField2 zeros(const GridSpec2& g, Basis b);
    const GridSpec2& grid() const { return c[0].grid; }
    Basis basis() const { return c[0].basis; }
};

struct SpinorField3 {
    std::array<SpectralField3, 2> c;
    static SpinorField3 zeros(const GridSpec3& g, Basis b);
    const GridSpec3& grid() const { return c[0].grid; }
    Basis basis() const { return c[0].basis; }
};

SpectralField2 transform(const SpectralField2& f, Basis target);
SpectralField3 transform(const SpectralField3& f, Basis target);
SpinorField2 transform(const SpinorField2& f, Basis target);
SpinorField3 transform(const SpinorField3& f, Basis target);

SpectralField2 operator+(const SpectralField2& a, const SpectralField2& b);
SpectralField2 operator-(const SpectralField2& a, const SpectralField2& b);
SpectralField2 operator*(cplx s, const SpectralField2& a);
SpinorField2 operator+(const SpinorField2& a, const SpinorField2& b);
SpinorField2 operator-(const SpinorField2& a, const SpinorField2& b);
SpinorField2 operator*(cplx s, const SpinorField2& a);

/// Max pointwise |a - b|; grids and bases must agree.
double max_abs_diff(const SpectralField2& a, const SpectralField2& b);
double max_abs_diff(const SpectralField3& a, const SpectralField3& b);

// ---------------------------------------------------------------------------
// Fourier multipliers
// ---------------------------------------------------------------------------

struct Symbol2 {
    std::function<cplx(Vec2)> fn;
    /// Non-empty when the symbol is singular at xi = 0 and the zero mode is zeroed.
    std::string zero_mode_note;
};

struct Symbol3 {
    std::function<cplx(double, Vec2)> fn;
    std::string zero_mode_note;
};

/// <xi>^s
Symbol2 japanese_power(double s);
/// |xi|^s; for s < 0 the zero mode is set to zero and noted.
Symbol2 homogeneous_power(double s);

/// Multiplies the spectrum by sym; returns a field in the input basis.
/// Throws NumericalError if the symbol is non-finite at a lattice point.
SpectralField2 apply_multiplier(const SpectralField2& f, const Symbol2& sym, Notes* notes = nullptr);
SpectralField3 apply_multiplier(const SpectralField3& f, const Symbol3& sym, Notes* notes = nullptr);

// ---------------------------------------------------------------------------
// Null-structure weights for a quadruple (tau, xi, eta, lambda)
// ---------------------------------------------------------------------------

struct Weights {
    double A;       // |tau| - |xi|
    double B;       // lambda + |eta|
    double C_plus;  // lambda - tau + |eta - xi|
    double C_minus; // lambda - tau - |eta - xi|
    double rho_plus;
    double rho_minus;
};

Weights weights_at(double tau, Vec2 xi, Vec2 eta, double lambda);

}  // namespace dkg
