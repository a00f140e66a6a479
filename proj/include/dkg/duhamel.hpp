#pragma once

#include "dkg/types.hpp"

namespace dkg {

// Time integrals against exponentials for sources that are piecewise linear
// between samples on a uniform grid t_j = j h. Exact for such sources.

struct SegmentWeights {
    cplx a;  // int_0^1 e^{-i theta v} dv
    cplx b;  // int_0^1 v e^{-i theta v} dv
};

SegmentWeights segment_weights(double theta);

/// int_{t0}^{t0+h} e^{-i w s} F(s) ds with F linear from f0 to f1.
cplx segment_integral(double w, double t0, double h, cplx f0, cplx f1);

/// J_k = int_0^{t_k} e^{-i w s} F(s) ds at every node.
std::vector<cplx> cumulative_oscillatory(const std::vector<cplx>& F, double w, double h);

/// One Fourier mode of phi'' + k^2 phi = -F (the frequency form of box phi = F),
/// accumulated segment by segment.
class WaveModeIntegrator {
public:
    WaveModeIntegrator(double k, double h) : k_(k), h_(h) {}

    /// Adds the segment [t, t + h] with source values f0, f1 at its ends.
    void push(cplx f0, cplx f1);
    double time() const { return t_; }

    struct Value {
        cplx phi;
        cplx phi_t;
    };
    /// Solution at the current time from initial data (phi0, phi1).
    Value value(cplx phi0, cplx phi1) const;

private:
    double k_;
    double h_;
    double t_ = 0.0;
    cplx jp_{0.0};  // int e^{-iks} F
    cplx jm_{0.0};  // int e^{+iks} F
    cplx j0_{0.0};  // int F
    cplx j1_{0.0};  // int s F
};

}  // namespace dkg
