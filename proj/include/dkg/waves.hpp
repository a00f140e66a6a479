#pragma once

#include "dkg/grid.hpp"
#include "dkg/kernels.hpp"

namespace dkg {

/// S_pm(t) f = e^{-+ i t |D|} f, returned in the input basis.
SpectralField2 half_wave(const SpectralField2& f, int sign, double t);
SpinorField2 half_wave(const SpinorField2& f, int sign, double t);

/// Space-time field u(t_j) = S_pm(t_j) f on the (wrapped) time lattice of g,
/// in physical basis. The spatial grid of g must match f.
SpectralField3 free_wave_film(const SpectralField2& f, int sign, const GridSpec3& g);

/// Samples at t_j = j dt, j = 0..N-1.
struct TimeSeries2 {
    double dt = 0.0;
    std::vector<SpectralField2> slices;
};

struct WaveSolution {
    TimeSeries2 phi;
    TimeSeries2 phi_t;
};

/// Solves box phi = F (box = -d_t^2 + Delta) with data (phi0, phi1), F
/// interpolated linearly between samples. Output in frequency basis.
WaveSolution wave_duhamel(const SpectralField2& phi0, const SpectralField2& phi1, const TimeSeries2& F);

/// Dyadic annulus A_lambda = {lambda < |xi| <= 2 lambda}.
SpectralField2 dyadic_project(const SpectralField2& f, double lambda);
/// Levels 2^j whose annuli cover every nonzero mode of the grid.
std::vector<double> dyadic_levels(const GridSpec2& g);

/// Projection onto A_lambda intersected with [j mu, (j+1) mu) x [k mu, (k+1) mu).
SpectralField2 square_project(const SpectralField2& f, double lambda, double mu, int j, int k);

/// High-high to low interaction: the product f g restricted to output
/// frequencies with |xi| <= c (|eta| + |xi - eta|), computed as a lattice
/// convolution on Z^2 (no wrap-around). Output in frequency basis.
SpectralField2 hh_to_low(const SpectralField2& f, const SpectralField2& g, double c = 0.25);

struct RatioResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct BilinearCase {
    double q = 2.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    int sign1 = 1;
    int sign2 = 1;
};

/// || |D|^{-s3} (S_1(t) f)(S_2(t) g) ||_{L^q_t([0,T]) L^2_x} over
/// ||f||_{H.^{s1}} ||g||_{H.^{s2}}, with n_t midpoint samples in time.
/// The grid must resolve the product (support within half the Nyquist box).
RatioResult strichartz_ratio(const BilinearCase& c, const SpectralField2& f, const SpectralField2& g,
                             double T, int n_t, Notes* notes = nullptr);

/// || S(t) f ||_{L^q_t([0,T]) L^4_x} over mu^{1/2 - 2/q} lambda^{1/q} ||f||_2
/// for f supported in A_lambda and the mu-square (j, k).
RatioResult improved_square_strichartz_ratio(const SpectralField2& f, double lambda, double mu, int j, int k,
                                             double q, int n_t, double T = 1.0);

struct HHLowCase {
    int sign1 = 1;
    int sign2 = 1;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double c = 0.25;
};

/// || |D|^{-s3} (u v)_{HH->L} ||_{L^2([0,T] x R^2)} over the homogeneous data
/// norms, with the time integral done exactly pair by pair.
RatioResult hh_low_ratio(const HHLowCase& c, const SpectralField2& f, const SpectralField2& g, double T,
                         Exec exec = Exec::Parallel, Notes* notes = nullptr);

}  // namespace dkg
