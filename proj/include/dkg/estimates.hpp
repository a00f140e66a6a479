#pragma once

#include "dkg/column_field.hpp"
#include "dkg/grid.hpp"
#include "dkg/kernels.hpp"

#include <cstdint>
#include <optional>

namespace dkg {

// ---------------------------------------------------------------------------
// Bilinear null-form estimates
// ---------------------------------------------------------------------------

enum class EstimateForm { B, A };

struct EstimateCase {
    EstimateForm which = EstimateForm::B;
    int sign1 = 1;
    int sign2 = 1;
    double s = 0.0;
    double r = 0.0;
    double eps = 0.0;
};

struct Sides {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Space-time transform of <beta Pi_1(D) psi, Pi_2(D) psi2> on a periodic
/// grid, via pointwise products in physical space. Frequency basis output.
SpectralField3 null_form(const SpinorField3& psi, const SpinorField3& psi2, int sign1, int sign2);

/// Same quantity for sparse lattice spectra, by direct summation over the
/// supports, evaluated at the points of `out` (values are overwritten).
void null_form_direct(const ColumnSpinorField& psi, const ColumnSpinorField& psi2, int sign1, int sign2,
                      ColumnScalarField& out, Exec exec = Exec::Parallel);

/// which = B: null form in H^{r-1,-1/2+2eps} against X^{s,1/2+eps} x X^{s,1/2+eps}.
/// which = A: null form in H^{-r,-1/2-eps} against X^{s,1/2+eps} x X^{-s,1/2-2eps}.
Sides estimate_sides(const EstimateCase& c, const SpinorField3& psi, const SpinorField3& psi2);

struct DualCheck {
    double direct_ratio;  // ||Pi_2(phi beta Pi_1 psi)||_{X^{s,-1/2+2eps}} / (||phi||_{H^{r,1/2+eps}} ||psi||_{X^{s,1/2+eps}})
    double dual_ratio;    // estimate_sides(A) at psi2 = Riesz representer of that functional
    double pairing_field; // <F, psi2>
    double pairing_null;  // int phi N
};

/// Compares the direct and dual forms for real phi; direct <= dual up to rounding.
DualCheck dual_form_check(const EstimateCase& c, const SpectralField3& phi, const SpinorField3& psi);

// ---------------------------------------------------------------------------
// Counterexample families
// ---------------------------------------------------------------------------

enum class Family { R1, R2, R3, S };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct CounterexampleConfig {
    double delta0 = 1.0;
    double thick_spacing = 0.25;   // lambda spacing and long-axis spacing for R1, R2
    int short_cells = 16;          // cells across a side ~ L^{1/2}
    double unit_spacing = 1.0 / 16; // all spacings for R3 and S
    size_t max_points = 20'000'000;
};

struct Rect {
    double c1, h1, c2, h2;  // centers and half-widths
    bool contains(Vec2 p, double tol = 1e-9) const {
        return std::abs(p.x - c1) <= h1 + tol && std::abs(p.y - c2) <= h2 + tol;
    }
};

struct FamilySets {
    Rect A, B, C;
};

FamilySets family_sets(Family f, double L);

struct Counterexample {
    Family family;
    double L = 0.0;
    int sign1 = 1;
    int sign2 = 1;
    FamilySets sets;
    ColumnSpinorField psi;
    ColumnSpinorField psi2;
    ColumnScalarField out;  // output region, values zero
};

Counterexample build_counterexample(Family f, double L, const CounterexampleConfig& cfg = {});

/// delta(r, s) of the family; the ratio behaves like L^{-delta}.
double family_delta(Family f, double s, double r);
/// Boundary value of r for fixed s (R families only).
double family_boundary(Family f, double s);

struct ScalingPoint {
    double L, lhs, rhs, ratio;
};

struct ScalingReport {
    Family family;
    double s = 0.0;
    double r = 0.0;
    std::vector<ScalingPoint> points;
    double fitted_slope = 0.0;
    double predicted_slope = 0.0;
    bool pass = false;
};

Sides counterexample_sides(const Counterexample& ce, double s, double r, double eps = 0.0,
                           Exec exec = Exec::Parallel);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

ScalingReport fit_scaling(Family f, double s, double r, const std::vector<double>& Ls,
                          const CounterexampleConfig& cfg = {}, double tol = 0.15, Exec exec = Exec::Parallel);

// ---------------------------------------------------------------------------
// Parameter region and weight relations
// ---------------------------------------------------------------------------

enum class RegionStatus { Inside, Boundary, Outside };

struct RegionReport {
    RegionStatus status;
    std::vector<std::string> violated;  // constraints failing (or within 1e-9 for boundary)
};

RegionReport region_check(double s, double r);
std::string region_name(RegionStatus s);

struct WeightReport {
    long samples = 0;
    long rho_violations = 0;
    double theta_plus_min = 0.0, theta_plus_max = 0.0;
    double theta_minus_min = 0.0, theta_minus_max = 0.0;
    bool ok = false;
};

/// Random (lambda, eta, tau, xi) with |eta|, |eta - xi| >= 1: checks the rho
/// inequalities and records the theta comparability constants.
WeightReport verify_weight_relations(long samples, std::uint64_t seed);

/// Smooth even cutoff, 1 on |t| <= 1 and 0 on |t| >= 2.
double cutoff_chi(double t);
SpinorField3 time_cutoff(const SpinorField3& psi);
SpectralField3 time_cutoff(const SpectralField3& u);

}  // namespace dkg
