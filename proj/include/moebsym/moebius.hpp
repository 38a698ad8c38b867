#pragma once

#include "moebsym/plane.hpp"

namespace moebsym {

// z -> (a z + b) / (c z + d), optionally conjugating z first (reversing).
// Coefficients are kept determinant-normalized: |ad - bc| = 1.
struct MoebiusMap {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};
    bool reversing = false;
};

// Build a map from raw coefficients; throws domain_error if ad - bc ~ 0.
MoebiusMap moebius(cplx a, cplx b, cplx c, cplx d, bool reversing = false);

MoebiusMap moebius_identity();

ExtendedPoint apply(const MoebiusMap& m, const ExtendedPoint& z);

// m1 after m2: (compose(m1, m2))(z) = m1(m2(z)).
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

MoebiusMap inverse(const MoebiusMap& m);

// Same map as a transformation: coefficients agree up to a global sign.
bool approx_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tol = 1e-9);

// Inversion in the circle |z - center| = radius.
struct Inversion {
    cplx center;
    double radius;
};

// Reflection over the line { z : Re(z * conj(unit_normal)) = offset },
// where |unit_normal| = 1.
struct LineReflection {
    cplx unit_normal;
    double offset;
};

// T_a as (reflection over a line through 0) composed with (an inversion):
// T_a = reflect_line o invert_circle.
struct AhlforsFactors {
    Inversion invert_circle;
    LineReflection reflect_line;
};

MoebiusMap inversion_map(const Inversion& inv);
MoebiusMap line_reflection_map(const LineReflection& refl);

// T_a(z) = (z - a) / (1 - conj(a) z); maps the unit disk onto itself,
// a -> 0, with +-a/|a| fixed. Requires |a| < 1.
MoebiusMap disk_automorphism(cplx a);

// Decompose T_a (a != 0) into its circle inversion and line reflection.
AhlforsFactors ahlfors_factorization(cplx a);

// Pole c of the punctured-disk map T_{a,b}; requires |a| != |b|, both nonzero.
cplx disk_pair_pole(cplx a, cplx b);

// T_{a,b}(z) = (b/conj(b)) (conj(c) z - 1) / (z - c): unit circle -> unit
// circle, a -> b, b -> a. Requires 0 < |a|, 0 < |b|, |a| != |b|.
MoebiusMap disk_map_pair(cplx a, cplx b);

// t_a(z) = (z - a) / (1 + conj(a) z): rotation of the Riemann sphere moving
// a to 0 (a chordal isometry).
MoebiusMap chordal_isometry(cplx a);

// The chordal isometry t_m for the chordal midpoint m of {a, b}, built from
// its closed-form coefficients. Throws degeneracy_error for antipodal a, b.
MoebiusMap chordal_midpoint_map(cplx a, cplx b);

} // namespace moebsym
