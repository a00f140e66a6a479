#pragma once

#include "dkg/dirac.hpp"
#include "dkg/types.hpp"

#include <climits>
#include <functional>

namespace dkg {

/// Spacings of an infinite space-time frequency lattice (lambda, eta1, eta2).
struct Lattice3 {
    double d_tau = 1.0;
    double d1 = 1.0;
    double d2 = 1.0;
    double cell() const { return d_tau * d1 * d2; }
    bool operator==(const Lattice3&) const = default;
};

/// Closed interval of lambda values attached to a frequency eta.
struct Band {
    double lo = 0.0;
    double hi = -1.0;
};

/// Sparse field on the lattice, stored as columns: for every eta index
/// (i1, i2) in a bounding box, a contiguous run of lambda indices.
template <class T>
struct ColumnField {
    Lattice3 lat;
    int i1_min = 0;
    int i2_min = 0;
    int n1 = 0;
    int n2 = 0;
    std::vector<int> lo;       // first lambda index per column
    std::vector<int> len;      // run length per column (0 = empty)
    std::vector<size_t> off;   // start in values per column
    std::vector<T> values;

    size_t columns() const { return lo.size(); }
    size_t points() const { return values.size(); }
    int i1_of(size_t c) const { return i1_min + int(c / n2); }
    int i2_of(size_t c) const { return i2_min + int(c % n2); }
    Vec2 eta_of(size_t c) const { return {i1_of(c) * lat.d1, i2_of(c) * lat.d2}; }
    double tau_of(size_t c, int k) const { return (lo[c] + k) * lat.d_tau; }

    /// Column index for (i1, i2), or -1 outside the bounding box.
    long column_at(int i1, int i2) const {
        const int a = i1 - i1_min;
        const int b = i2 - i2_min;
        if (a < 0 || a >= n1 || b < 0 || b >= n2) return -1;
        return long(a) * n2 + b;
    }

    template <class U>
    ColumnField<U> with_values(std::vector<U> vals) const {
        ColumnField<U> out;
        out.lat = lat;
        out.i1_min = i1_min;
        out.i2_min = i2_min;
        out.n1 = n1;
        out.n2 = n2;
        out.lo = lo;
        out.len = len;
        out.off = off;
        out.values = std::move(vals);
        return out;
    }
};

using ColumnSpinorField = ColumnField<Spinor>;
using ColumnScalarField = ColumnField<cplx>;

/// Support description: index box for eta, membership of eta, lambda band.
struct ColumnSupport {
    Lattice3 lat;
    int i1_min = 0;
    int i1_max = -1;
    int i2_min = 0;
    int i2_max = -1;
    std::function<bool(Vec2)> contains;
    std::function<Band(Vec2)> band;
};

/// Builds the support with zero values; lattice points are kept when they
/// lie in the closed set and closed band (tolerance 1e-9).
ColumnScalarField build_support(const ColumnSupport& s);

/// Fills a spinor field over a support from f(lambda, eta).
ColumnSpinorField fill_spinor(const ColumnScalarField& support,
                              const std::function<Spinor(double, Vec2)>& f);

}  // namespace dkg
