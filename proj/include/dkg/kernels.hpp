#pragma once

#include "dkg/column_field.hpp"
#include "dkg/grid.hpp"

#include <functional>

namespace dkg {

// Hot loops in two flavours: a plain serial reference and an OpenMP version.
// Both visit each output in the same order, so results agree bit for bit.

enum class Exec { Serial, Parallel };

/// out(o) = sum_p <a(p), b(p - o)> over the lattice, for every point o of
/// `out` (values overwritten). All three fields share one lattice.
void correlate_columns(const ColumnSpinorField& a, const ColumnSpinorField& b,
                       ColumnScalarField& out, Exec exec = Exec::Parallel);

/// Oscillatory sums grouped by output: group g holds coefficients c_j and
/// frequencies w_j; the kernel returns int_0^T |sum_j c_j e^{-i w_j t}|^2 dt
/// for every group, evaluated exactly pair by pair.
struct PairwiseGroups {
    std::vector<size_t> offsets{0};
    std::vector<cplx> coeff;
    std::vector<double> omega;

    size_t groups() const { return offsets.size() - 1; }
    void push(cplx c, double w) {
        coeff.push_back(c);
        omega.push_back(w);
    }
    void close_group() { offsets.push_back(coeff.size()); }
};

std::vector<double> window_energy(const PairwiseGroups& g, double T, Exec exec = Exec::Parallel);

/// int_0^T e^{-i d t} dt
cplx window_kernel(double d, double T);

/// sum |w(tau, xi) * u(tau, xi)|^2 over a frequency-basis field, with partial
/// sums per time-frequency slice combined in index order.
double weighted_sum_sq(const SpectralField3& u, const std::function<double(double, Vec2)>& w,
                       Exec exec = Exec::Parallel);

}  // namespace dkg
