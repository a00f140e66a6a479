#pragma once

#include "dkg/column_field.hpp"
#include "dkg/grid.hpp"
#include "dkg/kernels.hpp"

namespace dkg {

/// ||<D>^s f||_2, or ||D|^s f||_2 when homogeneous (zero mode dropped for s < 0).
double sobolev_norm(const SpectralField2& f, double s, bool homogeneous = false, Notes* notes = nullptr);
double sobolev_norm(const SpinorField2& f, double s, bool homogeneous = false, Notes* notes = nullptr);

enum class SpacetimeKind {
    XsbPlus,   // <xi>^s <tau + |xi|>^b
    XsbMinus,  // <xi>^s <tau - |xi|>^b
    Hsb,       // <xi>^s <|tau| - |xi|>^b
    HsbCurly,  // H^{s,b} norm of u plus H^{s-1,b} norm of d_t u
};

struct NormSpec {
    SpacetimeKind kind = SpacetimeKind::Hsb;
    double s = 0.0;
    double b = 0.0;
};

NormSpec xsb(int sign, double s, double b);

/// Multiplier whose weighted L^2 sum gives the squared norm (not defined for HsbCurly).
double spacetime_weight(const NormSpec& spec, double tau, Vec2 xi);

double spacetime_norm(const SpectralField3& u, const NormSpec& spec, Exec exec = Exec::Parallel);
double spacetime_norm(const SpinorField3& u, const NormSpec& spec, Exec exec = Exec::Parallel);

/// Product form <xi>^{s-1} <|tau|+|xi|> <|tau|-|xi|>^b of the curly norm.
double curly_product_form(const SpectralField3& u, double s, double b);

/// Norms of sparse lattice fields (values are space-time Fourier samples).
double spacetime_norm(const ColumnSpinorField& u, const NormSpec& spec);
double spacetime_norm(const ColumnScalarField& u, const NormSpec& spec);

/// L^r_x norm of a physical-basis field; r = infinity gives the max.
double lebesgue_norm(const SpectralField2& f, double r);

/// L^q_t L^r_x from time samples a_j = ||u(t_j)||_{L^r}, each carrying weight dt.
double time_lebesgue(const std::vector<double>& a, double dt, double q);

/// L^q_t L^r_x of a physical-basis space-time field over its whole time box.
double mixed_norm(const SpectralField3& u, double q, double r);

}  // namespace dkg
