#pragma once

#include "dkg/dirac.hpp"
#include "dkg/grid.hpp"

#include <cstdint>
#include <optional>

namespace dkg {

// ---------------------------------------------------------------------------
// Massless Dirac-Klein-Gordon system on a periodic box, split form
//   (-i d_t +- |D|) psi_pm = -Pi_pm(D)(phi beta psi),   box phi = -<beta psi, psi>.
// All fields are kept in frequency basis.
// ---------------------------------------------------------------------------

struct DKGState {
    SpinorField2 psi_plus;
    SpinorField2 psi_minus;
    SpectralField2 phi;
    SpectralField2 phi_t;
    double time = 0.0;

    static DKGState zeros(const GridSpec2& g);
    const GridSpec2& grid() const { return phi.grid; }
    SpinorField2 psi() const { return psi_plus + psi_minus; }
};

struct SolverConfig {
    GridSpec2 grid;
    double dt = 0.01;
    double T = 1.0;
    bool dealias = true;
    bool nonlinear = true;
    int record_every = 1;
    double mass_dirac = 0.0;
    double mass_field = 0.0;
};

struct NonlinearTerms {
    SpinorField2 rhs_plus;
    SpinorField2 rhs_minus;
    SpectralField2 rhs_phi;
};

/// Pi_pm(D) applied mode by mode; the zero mode is set to zero.
SpinorField2 project(const SpinorField2& f, int sign, const DiracRep& rep = pauli_rep());

/// 2/3-rule mask: modes with |m_j| <= n/3 on both axes survive.
void dealias(SpectralField2& f);
void dealias(SpinorField2& f);

/// Builds the split state from Cauchy data; psi_pm = Pi_pm(D) psi0.
DKGState initial_state(const SpinorField2& psi0, const SpectralField2& phi0, const SpectralField2& phi1,
                       bool dealiased = true);

NonlinearTerms nonlinearity(const DKGState& s, bool dealiased = true);
NonlinearTerms nonlinearity(const SpinorField2& psi, const SpectralField2& phi, bool dealiased = true);

/// One Lawson RK4 step (exact linear flow, RK4 in the interaction picture).
/// Negative dt integrates backward. Throws NumericalError on non-finite values.
DKGState step(const DKGState& s, double dt, bool nonlinear = true, bool dealiased = true);

/// int |psi|^2 dx
double charge(const DKGState& s);
double charge(const SpinorField2& psi);

struct TrajectoryRow {
    double time;
    double charge;
    double hs_psi;
    double hr_phi;
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    std::vector<DKGState> states;  // every record_every steps, including t = 0
    Notes notes;
};

/// Integrates from the state to config.T (negative T with negative dt runs
/// backward). Rows report ||psi||_{H^s} and (||phi||_{H^r}^2 + ||phi_t||_{H^{r-1}}^2)^{1/2}.
Trajectory solve(const DKGState& initial, const SolverConfig& config, double s = 0.0, double r = 0.5);

struct PicardConfig {
    double T = 0.25;
    int intervals = 64;
    int depth = 6;
    double s = 0.0;
    double r = 0.5;
    bool dealias = true;
};

struct PicardIterate {
    std::vector<DKGState> nodes;  // states at t_k = k T / intervals
};

struct PicardResult {
    std::vector<PicardIterate> iterates;  // 0..depth
    std::vector<double> diffs;            // d_j = max_t of the H^s x H^r x H^{r-1} distance of iterates
    std::vector<double> ratios;           // d_{j+1} / d_j
    std::optional<int> diverged_at;
};

PicardResult picard_iterates(const DKGState& initial, const PicardConfig& config);

/// g(t) = t chi(t), chi the smooth cutoff equal to 1 on |t| <= 1.
double iterate_gain(double t);

struct IterateConfig {
    int samples = 0;      // time samples on [0, t]; 0 picks 32 per unit of max frequency
    bool pad = true;      // evaluate rho on a 2x zero-padded grid (exact product)
};

/// ||Phi1(t)||_{H^sigma} for box Phi1 = -g(t) <beta psi0(t), psi0(t)>, zero data,
/// psi0(t) the free Dirac evolution of psi0. Several sigmas share one solve.
std::vector<double> first_iterate_regularity(const SpinorField2& psi0, const std::vector<double>& sigmas,
                                             double t, const IterateConfig& cfg = {});
double first_iterate_regularity(const SpinorField2& psi0, double sigma, double t);

/// hat f(xi) = <xi>^{-(s+1)} e^{i theta(xi)}, theta a hash of (seed, mode), so
/// refining the grid at fixed box only adds modes.
SpectralField2 rough_data(double s, std::uint64_t seed, const GridSpec2& g);
SpinorField2 rough_spinor(double s, std::uint64_t seed, const GridSpec2& g);

/// Binary snapshot: "DKGS", u32 version, u32 n, f64 box, f64 time, then
/// complex64 arrays psi_plus[2], psi_minus[2], phi, phi_t (little-endian).
void write_snapshot(const std::string& path, const DKGState& s);
DKGState read_snapshot(const std::string& path);

}  // namespace dkg
