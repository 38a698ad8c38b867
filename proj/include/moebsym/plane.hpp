#pragma once

#include <complex>

namespace moebsym {

using cplx = std::complex<double>;

// A point of the extended complex plane: a finite value or the point at
// infinity. Infinity is a tagged value equal only to itself, never a large
// float.
struct ExtendedPoint {
    cplx value{0.0, 0.0};
    bool inf = false;

    ExtendedPoint() = default;
    ExtendedPoint(cplx v) : value(v) {}
    ExtendedPoint(double re, double im) : value(re, im) {}

    static ExtendedPoint infinity() {
        ExtendedPoint p;
        p.inf = true;
        return p;
    }

    bool finite() const { return !inf; }

    friend bool operator==(const ExtendedPoint& x, const ExtendedPoint& y) {
        if (x.inf || y.inf) return x.inf == y.inf;
        return x.value == y.value;
    }
    friend bool operator!=(const ExtendedPoint& x, const ExtendedPoint& y) {
        return !(x == y);
    }
};

// Point of the Riemann sphere S²(e₃/2, 1/2) ⊂ ℝ³.
struct SpherePoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

// π(x) = e₃ + (x−e₃)/|x−e₃|²; π(∞) = e₃.
SpherePoint stereographic_projection(const ExtendedPoint& p);

// q(x,y) = |x−y| / (√(1+|x|²)·√(1+|y|²)), q(x,∞) = 1/√(1+|x|²);
// equals the ℝ³ distance of the stereographic images.
double chordal_distance(const ExtendedPoint& x, const ExtendedPoint& y);

// A[x,y] = |1 − x·conj(y)| for x, y inside the unit disk.
double ahlfors_bracket(cplx x, cplx y);

// ρ(x,y) = 2·artanh(|x−y| / A[x,y]) on the unit disk.
double hyperbolic_distance(cplx x, cplx y);

// |a,b,c,d| = |a−c||b−d| / (|a−b||c−d|) for four distinct points, at most
// one of them ∞ (the two factors containing ∞ cancel).
double absolute_ratio(const ExtendedPoint& a, const ExtendedPoint& b,
                      const ExtendedPoint& c, const ExtendedPoint& d);

} // namespace moebsym
