#include "dkg/duhamel.hpp"

namespace dkg {

SegmentWeights segment_weights(double theta) {
    if (std::abs(theta) < 0.25) {
        // a = sum (-i theta)^n / (n+1)!,  b = sum (-i theta)^n / (n! (n+2))
        cplx a(0.0), b(0.0), p(1.0);
        double fact = 1.0;
        for (int n = 0; n < 14; ++n) {
            if (n > 0) fact *= n;
            a += p / (fact * (n + 1));
            b += p / (fact * (n + 2));
            p *= cplx(0.0, -theta);
        }
        return {a, b};
    }
    const cplx z(0.0, -theta);
    const cplx e = std::exp(z);
    return {(e - 1.0) / z, e * (1.0 / z - 1.0 / (z * z)) + 1.0 / (z * z)};
}

cplx segment_integral(double w, double t0, double h, cplx f0, cplx f1) {
    const SegmentWeights sw = segment_weights(w * h);
    return std::exp(cplx(0.0, -w * t0)) * h * (f0 * sw.a + (f1 - f0) * sw.b);
}

std::vector<cplx> cumulative_oscillatory(const std::vector<cplx>& F, double w, double h) {
    std::vector<cplx> J(F.size(), cplx(0.0));
    for (size_t j = 1; j < F.size(); ++j)
        J[j] = J[j - 1] + segment_integral(w, double(j - 1) * h, h, F[j - 1], F[j]);
    return J;
}

void WaveModeIntegrator::push(cplx f0, cplx f1) {
    if (k_ == 0.0) {
        const double tm = t_ + 0.5 * h_;
        j0_ += 0.5 * h_ * (f0 + f1);
        j1_ += h_ / 6.0 * (t_ * f0 + 4.0 * tm * 0.5 * (f0 + f1) + (t_ + h_) * f1);
    } else {
        jp_ += segment_integral(k_, t_, h_, f0, f1);
        jm_ += segment_integral(-k_, t_, h_, f0, f1);
    }
    t_ += h_;
}

WaveModeIntegrator::Value WaveModeIntegrator::value(cplx phi0, cplx phi1) const {
    const double t = t_;
    if (k_ == 0.0) return {phi0 + t * phi1 - (t * j0_ - j1_), phi1 - j0_};
    const double c = std::cos(k_ * t);
    const double s = std::sin(k_ * t);
    const cplx ep = std::exp(cplx(0.0, k_ * t));
    const cplx em = std::conj(ep);
    const cplx duh = (ep * jp_ - em * jm_) / cplx(0.0, 2.0 * k_);
    const cplx duh_t = 0.5 * (ep * jp_ + em * jm_);
    return {c * phi0 + s / k_ * phi1 - duh, -k_ * s * phi0 + c * phi1 - duh_t};
}

}  // namespace dkg
