#pragma once

#include "moebsym/plane.hpp"

#include <array>
#include <utility>

namespace moebsym {

// A circle orthogonal to the unit circle: |center|^2 = 1 + radius^2.
struct OrthoCircle {
    cplx center;
    double radius = 0.0;
};

// The five distinguished points of a positively ordered circle quadruple:
// w1, w2, w3 are chord-line intersections (w3 may be at infinity), w4 is the
// common point of the two orthogonal circles through opposite pairs, w5 is
// the point of w1's orthogonal circle nearest the origin.
struct QuadCirclePoints {
    ExtendedPoint w1, w2, w3;
    cplx w4, w5;
};

// Intersection of lines L(a,b) and L(c,d). Parallel distinct lines meet at
// infinity; identical lines have no single intersection (degeneracy).
ExtendedPoint line_intersection(cplx a, cplx b, cplx c, cplx d);

// The four closed-form intersections involving the inverted points 1/conj(.)
// and -1/conj(.):
//   [0] L(a,b) ^ L(-1/conj(a), -1/conj(b))
//   [1] L(a,b) ^ L(1/conj(a), 1/conj(b))
//   [2] L(a, 1/conj(b)) ^ L(b, 1/conj(a))
//   [3] L(a, -1/conj(b)) ^ L(b, -1/conj(a))
// Requires a,b nonzero with |a| != |b| and |a||b| != 1.
std::array<cplx, 4> lis_star_variants(cplx a, cplx b);

// Endpoints of the full chord of the unit circle through disk points a, b,
// ordered so that |a1 - a| < |a1 - b|.
std::pair<cplx, cplx> chord_endpoints(cplx a, cplx b);

// Midpoint of x and y in the hyperbolic metric of the unit disk.
cplx hyperbolic_midpoint(cplx x, cplx y);

// Midpoint of a and b in the chordal metric; degenerate for antipodal
// points on the sphere (every great-circle midpoint is equidistant).
cplx chordal_midpoint(cplx a, cplx b);

// The circle through disk points a and b orthogonal to the unit circle
// (the hyperbolic line through them). Diameter geodesics have no such
// circle and signal a domain error.
OrthoCircle ortho_circle(cplx a, cplx b);

// The point of the hyperbolic line through a and b closest to the origin;
// 0 itself when a, b, 0 are collinear.
cplx nearest_geodesic_point(cplx a, cplx b);

// Boundary endpoints of the hyperbolic line through x and y, as
// (endpoint beyond x, endpoint beyond y).
std::pair<cplx, cplx> geodesic_endpoints(cplx x, cplx y);

// The circle through unit-circle points a and c orthogonal to the unit
// circle. Degenerate when a = +-c.
OrthoCircle boundary_ortho_circle(cplx a, cplx c);

// The w1..w5 points for four distinct unit-circle points in strictly
// positive (counterclockwise) order.
QuadCirclePoints circle_quad_points(cplx a, cplx b, cplx c, cplx d);

} // namespace moebsym
