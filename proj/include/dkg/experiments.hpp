#pragma once

// Experiment drivers shared by the dkglab CLI and the acceptance binary.
// Each driver returns a report with its own verdict; the write_* functions
// emit the CSV form.

#include "dkg/dirac.hpp"
#include "dkg/estimates.hpp"
#include "dkg/solver.hpp"
#include "dkg/waves.hpp"

#include <filesystem>

namespace dkg {

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

/// "pauli", "alt" (alpha = (s1, s3), beta = s2) or "beta_identity" (broken).
DiracRep parse_rep(const std::string& name);

struct AlgebraCheck {
    std::string name;
    double max_violation = 0.0;
    long violations = 0;
};

struct AlgebraReport {
    long samples = 0;
    std::vector<AlgebraCheck> checks;
    bool ok = false;
    std::string first_failure;
};

/// Clifford identities, projector laws, eigenvectors and the null-symbol
/// bounds on random frequencies.
AlgebraReport verify_algebra(const DiracRep& rep, long samples, std::uint64_t seed, double tol = 1e-12);

void write_algebra_csv(const std::filesystem::path& path, const AlgebraReport& r);
void write_weights_csv(const std::filesystem::path& path, const WeightReport& r);
void write_scaling_csv(const std::filesystem::path& path, const std::vector<ScalingReport>& reports);

// ---------------------------------------------------------------------------
// Ratio scans over a dyadic parameter
// ---------------------------------------------------------------------------

struct ScanRow {
    double param = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

enum class ScanVerdict {
    Bounded,    // max/min <= limit
    Growing,    // last/first >= limit
    Monotone,   // strictly increasing
    Capped,     // max <= limit
};

struct ScanReport {
    std::string label;
    std::vector<ScanRow> rows;
    ScanVerdict verdict = ScanVerdict::Bounded;
    double limit = 0.0;
    double statistic = 0.0;
    bool pass = false;
};

/// Fills in statistic and pass from the rows.
void judge(ScanReport& r);

void write_scan_csv(const std::filesystem::path& path, const std::vector<ScanReport>& reports);

/// Indicator of {lambda <= |xi| <= 2 lambda, |arg xi - direction| <= half_angle}.
SpectralField2 sector_data(const GridSpec2& g, double lambda, double half_angle, double direction);

struct HHScanConfig {
    HHLowCase c{1, 1, 0.125, 0.125, 0.25, 0.25};
    std::vector<double> lambdas{4, 8, 16, 32, 64};
    int n = 256;
    double box_scale = 256.0;  // box = box_scale / lambda
    double half_angle = 1.0 / 16;
    double T = 1.0;
};

/// Sector data in opposite directions; bounded for equal signs, growing
/// (factor 2) otherwise.
ScanReport hh_scan(const HHScanConfig& cfg, Exec exec = Exec::Parallel);

/// Smooth radial bump supported in lambda < |xi| < 2 lambda, times e^{i shift xi_1 / lambda}.
SpectralField2 annulus_bump(const GridSpec2& g, double lambda, double shift);
/// Indicator of the closed disc |xi - center| <= radius.
SpectralField2 ball_data(const GridSpec2& g, Vec2 center, double radius);

struct DilationConfig {
    BilinearCase c{4, 0.375, 0.375, 0.0, 1, 1};
    std::vector<double> lambdas{2, 4, 8};
    int n = 64;
    double box_scale = 40.0;  // box = box_scale / lambda
    int samples_per_lambda = 32;
    double T = 1.0;
};

/// Dilated annulus bumps; ratios agree within 25% when s1 + s2 + s3 = 1 - 1/q.
ScanReport dilation_scan(const DilationConfig& cfg);

struct ConcentrationConfig {
    BilinearCase c{4, 0.0, 0.0, 0.75, 1, -1};
    std::vector<double> lambdas{2, 4, 8, 16, 32};
    int n = 576;
    double dk = 0.125;
    int n_t = 64;
    double T = 1.0;
};

/// Discs of radius sqrt(lambda)/2 at +-lambda e_1, both travelling along e_1.
/// The ratio grows like lambda^{(1/q - s1 - s2)/2}; the verdict is monotone growth.
ScanReport concentration_scan(const ConcentrationConfig& cfg);

struct SquareConfig {
    double lambda = 32.0;
    std::vector<double> mus{2, 4, 8, 16, 32};
    double q = 8.0;
    int n = 576;
    double dk = 0.25;
    int n_t = 256;
    double T = 1.0;
};

/// Indicator data on A_lambda and the mu-square (floor(1.5 lambda / mu), 0).
/// Bounded within a factor 2 for finite q, capped at 1.05 for q = inf.
ScanReport square_scan(const SquareConfig& cfg);

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

/// Gaussian data of the given amplitude, real phi.
DKGState smooth_state(const GridSpec2& g, double amplitude);

/// rough_spinor(s) and rough_data(r), rough_data(r - 1) scaled by amplitude;
/// phi and phi_t are replaced by their real parts.
DKGState rough_state(const GridSpec2& g, double s, double r, double amplitude, std::uint64_t seed);

struct SolverCheck {
    Trajectory trajectory;
    double charge_drift = 0.0;       // max_t |Q(t) - Q(0)| / Q(0)
    double projection_defect = 0.0;  // max over recorded states
    double phi_imag = 0.0;           // max |Im phi| in physical space
    double richardson = 0.0;         // E(2 dt) / E(dt) against a dt/16 reference
    bool pass = false;
};

SolverCheck solver_check(const DKGState& initial, const SolverConfig& config);

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& t);

struct PicardCheck {
    double s = 0.0;
    double r = 0.0;
    PicardResult result;
    bool pass = false;  // d_{j+1} / d_j < 1 for j = 1..4
};

PicardCheck picard_check(const DKGState& initial, const PicardConfig& config);

void write_picard_csv(const std::filesystem::path& path, const std::vector<PicardCheck>& checks);

struct IterateReport {
    std::vector<int> ns;
    std::vector<double> sigmas;
    std::vector<std::vector<double>> norms;  // [level][sigma]
    std::vector<double> rel_change;          // |N_last - N_first| / N_first per sigma
    double stable_below = 0.75;
    bool pass = false;
};

struct IterateRunConfig {
    std::vector<int> ns{32, 64, 128};
    std::vector<double> sigmas{0.5, 0.7, 0.9};
    double data_s = 0.0;
    std::uint64_t seed = 7;
    double box = two_pi;
    double t = 1.0;
    double stable_tol = 0.10;
    double growth_min = 0.25;
    IterateConfig solver;
};

/// Refinement study of ||Phi1(t)||_{H^sigma}: sigmas below 3/4 must change by
/// at most stable_tol across the levels, sigmas above by at least growth_min.
IterateReport iterate_refinement(const IterateRunConfig& cfg);

void write_iterate_csv(const std::filesystem::path& path, const IterateReport& r);

}  // namespace dkg
