#pragma once

#include "moebsym/geometry.hpp"
#include "moebsym/moebius.hpp"
#include "moebsym/plane.hpp"

#include <optional>

namespace moebsym {

enum class QuadBranch { linear, generic };

// Möbius map h sending a distinct quadruple (a,b,c,d) to (-1, y, -y, 1).
struct QuadSymmetrization {
    MoebiusMap map;
    cplx y;
    QuadBranch branch = QuadBranch::generic;
    // Both roots of the y-quadratic were unimodular and the choice fell to
    // the sign convention (nonnegative imaginary part, then real part).
    bool root_tie = false;
    cplx center;  // h^{-1}(0)
    // Generic branch only: h(z) = (p z + q)/(z + s) and the quadratic
    // k0 y^2 + 2 k1 y + k0 = 0 the chosen y solves.
    cplx p, q, s;
    cplx k0, k1;
};

QuadSymmetrization symmetrize_quadruple(cplx a, cplx b, cplx c, cplx d);

// h^{-1}(0) for the symmetrizing map of (a,b,c,d); (a+d)/2 in the linear
// branch, -q/p otherwise.
cplx moebius_center(cplx a, cplx b, cplx c, cplx d);

// Scalar data of the symmetrization of the special quadruple (0, 1, x, inf)
// onto (-1, y, -y, 1): only |y|, |y+1|^2 and the auxiliary root t are
// determined by x.
struct SpecialSymmetrization {
    double abs_y = 0.0;        // |y| = |x-1| / (1 + |x| + t)
    double norm_y_plus = 0.0;  // |y+1|^2 = 4 / (1 + |x| + t)
    double t = 0.0;            // sqrt((1+|x|)^2 - |x-1|^2)
};

SpecialSymmetrization symmetrize_special(cplx x);

enum class PairMode { antipodal, collinear, equinorm };

// Normalization of a disk pair (a,b) into a special position:
//   antipodal: T_{h_ab} sends the pair to opposite points,
//   collinear: T_k puts the images on a diameter,
//   equinorm:  T_{h_ab,k} gives the images equal modulus.
struct PairNormalization {
    PairMode mode = PairMode::antipodal;
    MoebiusMap map;
    cplx h_ab;   // hyperbolic midpoint of a, b
    cplx k;      // point of the geodesic through a, b nearest 0
    double lip = 1.0;  // Euclidean Lipschitz constant of map
};

PairNormalization normalize_pair(cplx a, cplx b, PairMode mode);

enum class QuadMethod { reflection, antipodal };

// Symmetrization of a positively ordered circle quadruple:
//   reflection: T_{w4,w5} makes the image symmetric over a line through 0,
//   antipodal:  T_{w4} makes opposite image points antipodal.
struct CircleQuadSymmetrization {
    QuadMethod method = QuadMethod::reflection;
    MoebiusMap map;
    QuadCirclePoints points;
    double lip = 1.0;
};

CircleQuadSymmetrization symmetrize_circle_quadruple(cplx a, cplx b, cplx c,
                                                     cplx d, QuadMethod method);

// Angle theta (if any) such that z -> e^{2 i theta} conj(z) permutes the
// images (m(a), m(b), m(c), m(d)), tried over the four axis-compatible
// pairings. Residual tolerance 1e-9.
std::optional<double> reflection_axis(const MoebiusMap& m, cplx a, cplx b,
                                      cplx c, cplx d);

} // namespace moebsym
